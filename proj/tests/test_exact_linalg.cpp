#include "klein4/algebra.hpp"
#include "klein4/f2_matrix.hpp"
#include "klein4/int_matrix.hpp"
#include "klein4/integer_kernel.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace klein4;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

std::size_t flat_rank(const std::vector<F2Matrix>& v, std::size_t m) {
    F2Matrix flat(v.size(), m * m);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
                if (v[i].get(p, q)) flat.set(i, p * m + q, true);
    return flat.rank();
}

}  // namespace

TEST_CASE("determinant examples") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix{{0, 1}, {1, 1}}) == -1);
    CHECK(det(IntMatrix{{1, 0}, {0, -1}}) == -1);
    CHECK(det(IntMatrix()) == 1);  // empty matrix
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 5;
        IntMatrix a = random_matrix(rng, n, n, -4, 4);
        CHECK(det(a) == oracles::det_cofactor(a));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 4;
        IntMatrix a = random_matrix(rng, n, n, -3, 3);
        IntMatrix b = random_matrix(rng, n, n, -3, 3);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("integer kernel examples") {
    CHECK(integer_kernel(IntMatrix{{2}}).empty());

    auto basis = integer_kernel(IntMatrix{{1, 1}});
    REQUIRE(basis.size() == 1);
    Int x0 = basis[0](0, 0), x1 = basis[0](1, 0);
    CHECK(x0 + x1 == 0);
    CHECK((x0 == 1 || x0 == -1));

    auto zero_kernel = integer_kernel(IntMatrix(3, 3));
    REQUIRE(zero_kernel.size() == 3);
    IntMatrix rows = integer_kernel_rows(IntMatrix(3, 3));
    Int d = det(rows);
    CHECK((d == 1 || d == -1));  // a basis of Z^3
}

TEST_CASE("kernel vectors solve the system") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 4;
        IntMatrix a = random_matrix(rng, rows, cols, -3, 3);
        for (const IntMatrix& v : integer_kernel(a)) {
            IntMatrix prod = a * v;
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("kernel basis is saturated") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + trial % 2, cols = 2 + trial % 2;
        IntMatrix a = random_matrix(rng, rows, cols, -2, 2);
        IntMatrix basis = integer_kernel_rows(a);
        // brute-force small solutions must be integer combinations
        std::vector<long> x(cols, -3);
        for (;;) {
            bool solves = true;
            for (std::size_t i = 0; i < rows && solves; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < cols; ++j) acc += a(i, j) * Int(x[j]);
                solves = acc == 0;
            }
            if (solves) {
                std::vector<Int> v(x.begin(), x.end());
                CHECK(oracles::in_integer_row_span(basis, v));
            }
            std::size_t k = 0;
            while (k < cols && x[k] == 3) x[k++] = -3;
            if (k == cols) break;
            ++x[k];
        }
    }
}

TEST_CASE("f2 row space examples") {
    F2Matrix a(3, 2);
    a.set(0, 0, true);
    a.set(1, 0, true);
    a.set(2, 1, true);
    CHECK(f2_row_space(a).first == 2);
    CHECK(f2_row_space(F2Matrix(4, 4)).first == 0);
    CHECK(f2_row_space(F2Matrix::identity(5)).first == 5);
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
        F2Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, bit(rng));
        auto [rank1, basis1] = f2_row_space(m);
        auto [rank2, basis2] = f2_row_space(basis1);
        CHECK(rank1 == rank2);
        CHECK(basis1 == basis2);
    }
}

TEST_CASE("f2 characteristic polynomial matches the integer one") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 8;
        IntMatrix a(n, n);
        F2Matrix a2(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int v = bit(rng);
                a(i, j) = v;
                a2.set(i, j, v);
            }
        std::vector<Int> c = oracles::charpoly_int(a);
        F2Poly chi = f2_charpoly(a2);
        for (std::size_t k = 0; k <= n; ++k) {
            bool expected = (c[k] % 2 + 2) % 2 == 1;
            CHECK(chi.coeff(static_cast<int>(k)) == expected);
        }
    }
}

TEST_CASE("algebra radical and locality") {
    SECTION("dual numbers: nilpotent part is the radical") {
        F2Matrix eps(2, 2);
        eps.set(0, 1, true);
        F2Algebra a({F2Matrix::identity(2), eps}, 2);
        auto rad = a.radical();
        REQUIRE(rad.size() == 1);
        CHECK(rad[0] == eps);
        CHECK(a.is_local());
    }
    SECTION("field extension: radical zero, still local") {
        F2Matrix w(2, 2);  // companion of x^2+x+1
        w.set(0, 1, true);
        w.set(1, 0, true);
        w.set(1, 1, true);
        F2Algebra a({F2Matrix::identity(2), w}, 2);
        CHECK(a.radical().empty());
        CHECK(a.is_local());
    }
    SECTION("full matrix algebra: semisimple, not local") {
        std::vector<F2Matrix> basis;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                F2Matrix e(2, 2);
                e.set(i, j, true);
                basis.push_back(e);
            }
        F2Algebra a(basis, 2);
        CHECK(a.radical().empty());
        CHECK_FALSE(a.is_local());
    }
    SECTION("split pair of blocks") {
        F2Matrix e0(2, 2), e1(2, 2);
        e0.set(0, 0, true);
        e1.set(1, 1, true);
        F2Algebra a({e0, e1}, 2);
        CHECK(a.radical().empty());
        CHECK_FALSE(a.is_local());
    }
    SECTION("constructor rejects a span without the identity") {
        F2Matrix eps(2, 2);
        eps.set(0, 1, true);
        CHECK_THROWS_AS(F2Algebra({eps}, 2), std::invalid_argument);
    }
}

TEST_CASE("radical agrees with a brute-force nil-ideal oracle") {
    // x lies in the radical iff x*y is nilpotent for every y in the algebra
    auto brute_radical_dim = [](const F2Algebra& a) {
        const std::size_t r = a.dim(), m = a.m();
        std::vector<F2Matrix> members;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
            F2Matrix x(m, m);
            for (std::size_t i = 0; i < r; ++i)
                if ((mask >> i) & 1u) x.xor_with(a.basis()[i]);
            bool in_rad = true;
            for (std::uint64_t ymask = 0; ymask < (std::uint64_t(1) << r) && in_rad; ++ymask) {
                F2Matrix y(m, m);
                for (std::size_t i = 0; i < r; ++i)
                    if ((ymask >> i) & 1u) y.xor_with(a.basis()[i]);
                F2Matrix p = x * y;
                for (std::size_t k = 0; k < m; ++k) p = p * p;  // p^(2^m)
                if (!p.is_zero()) in_rad = false;
            }
            if (in_rad) members.push_back(x);
        }
        return members;
    };

    std::mt19937 rng(67);
    std::uniform_int_distribution<int> bit(0, 1);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 20; ++trial) {
        std::size_t m = 2 + trial % 3;
        F2Matrix g(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) g.set(i, j, bit(rng));
        // close {identity, g} under multiplication, keep an independent set
        std::vector<F2Matrix> basis = {F2Matrix::identity(m)};
        std::vector<F2Matrix> queue = {g};
        while (!queue.empty()) {
            F2Matrix x = queue.back();
            queue.pop_back();
            std::vector<F2Matrix> bigger = basis;
            bigger.push_back(x);
            if (flat_rank(bigger, m) == basis.size()) continue;
            basis.push_back(x);
            for (const auto& y : basis) {
                queue.push_back(x * y);
                queue.push_back(y * x);
            }
        }
        if (basis.size() > 9) continue;  // keep the 2^r oracle fast
        F2Algebra a(basis, m);
        auto brute = brute_radical_dim(a);
        CHECK(flat_rank(a.radical(), m) == flat_rank(brute, m));
        ++tested;
    }
    CHECK(tested >= 10);
}
