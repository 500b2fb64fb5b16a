#pragma once

#include "klein4/int_matrix.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <vector>

namespace klein4 {

namespace detail {

// Row elimination over the integers on [M | T], T starting as the identity.
// Only zeroes below pivots; the rows of T facing zero rows of M then form a
// saturated basis of the left kernel of M. Generic over the scalar so the
// same code runs a checked int64 fast path and an exact cpp_int fallback.

template <typename T>
struct ScalarOps;

template <>
struct ScalarOps<std::int64_t> {
    static bool mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
        return !__builtin_mul_overflow(a, b, &out);
    }
    static bool sub(std::int64_t a, std::int64_t b, std::int64_t& out) {
        return !__builtin_sub_overflow(a, b, &out);
    }
    static std::int64_t quot(std::int64_t a, std::int64_t b) { return a / b; }
    static std::int64_t abs(std::int64_t a) {
        return a < 0 ? -a : a;  // callers never pass INT64_MIN: guarded by mul/sub checks
    }
};

template <>
struct ScalarOps<Int> {
    static bool mul(const Int& a, const Int& b, Int& out) {
        out = a * b;
        return true;
    }
    static bool sub(const Int& a, const Int& b, Int& out) {
        out = a - b;
        return true;
    }
    static Int quot(const Int& a, const Int& b) { return a / b; }
    static Int abs(const Int& a) { return a < 0 ? -a : a; }
};

template <typename T>
std::optional<std::vector<std::vector<T>>> left_kernel_rows(
    std::vector<std::vector<T>> m, std::size_t ncols) {
    using Ops = ScalarOps<T>;
    const std::size_t nrows = m.size();
    std::vector<std::vector<T>> t(nrows, std::vector<T>(nrows, T(0)));
    for (std::size_t i = 0; i < nrows; ++i) t[i][i] = T(1);

    // row_i -= q * row_p on both M and T
    auto reduce_row = [&](std::size_t i, std::size_t p, const T& q) -> bool {
        if (q == T(0)) return true;
        T prod, diff;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (!Ops::mul(q, m[p][j], prod)) return false;
            if (!Ops::sub(m[i][j], prod, diff)) return false;
            m[i][j] = diff;
        }
        for (std::size_t j = 0; j < nrows; ++j) {
            if (!Ops::mul(q, t[p][j], prod)) return false;
            if (!Ops::sub(t[i][j], prod, diff)) return false;
            t[i][j] = diff;
        }
        return true;
    };

    std::size_t r = 0;
    for (std::size_t j = 0; j < ncols && r < nrows; ++j) {
        for (;;) {
            std::size_t best = nrows;
            for (std::size_t i = r; i < nrows; ++i)
                if (m[i][j] != T(0) &&
                    (best == nrows || Ops::abs(m[i][j]) < Ops::abs(m[best][j])))
                    best = i;
            if (best == nrows) break;  // column already clear below r
            if (best != r) {
                std::swap(m[best], m[r]);
                std::swap(t[best], t[r]);
            }
            bool clean = true;
            for (std::size_t i = r + 1; i < nrows; ++i) {
                if (m[i][j] == T(0)) continue;
                T q = Ops::quot(m[i][j], m[r][j]);
                if (!reduce_row(i, r, q)) return std::nullopt;
                if (m[i][j] != T(0)) clean = false;  // remainder: Euclid continues
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }

    std::vector<std::vector<T>> kernel;
    for (std::size_t i = r; i < nrows; ++i) kernel.push_back(t[i]);
    return kernel;
}

}  // namespace detail

/// Basis of the integer solution lattice {x : A x = 0}, returned as the rows
/// of a (nullity x cols) matrix. The basis is saturated: every integer
/// solution is an integer combination of the rows. Runs a checked 64-bit
/// elimination first and falls back to unbounded integers on overflow.
inline IntMatrix integer_kernel_rows(const IntMatrix& a) {
    const std::size_t nrows = a.cols();  // eliminate the transpose
    const std::size_t ncols = a.rows();

    bool fits64 = true;
    std::vector<std::vector<std::int64_t>> m64(
        nrows, std::vector<std::int64_t>(ncols, 0));
    for (std::size_t i = 0; i < nrows && fits64; ++i)
        for (std::size_t j = 0; j < ncols; ++j) {
            const Int& v = a(j, i);
            if (v < std::numeric_limits<std::int64_t>::min() / 4 ||
                v > std::numeric_limits<std::int64_t>::max() / 4) {
                fits64 = false;
                break;
            }
            m64[i][j] = static_cast<std::int64_t>(v);
        }

    if (fits64) {
        if (auto k = detail::left_kernel_rows<std::int64_t>(std::move(m64), ncols)) {
            IntMatrix basis(k->size(), a.cols());
            for (std::size_t i = 0; i < k->size(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j)
                    basis(i, j) = (*k)[i][j];
            return basis;
        }
    }

    std::vector<std::vector<Int>> m(nrows, std::vector<Int>(ncols));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m[i][j] = a(j, i);
    auto k = detail::left_kernel_rows<Int>(std::move(m), ncols);
    IntMatrix basis(k->size(), a.cols());
    for (std::size_t i = 0; i < k->size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) basis(i, j) = (*k)[i][j];
    return basis;
}

/// Kernel basis as a list of column vectors (cols x 1 each).
inline std::vector<IntMatrix> integer_kernel(const IntMatrix& a) {
    IntMatrix rows = integer_kernel_rows(a);
    std::vector<IntMatrix> cols;
    cols.reserve(rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        IntMatrix v(a.cols(), 1);
        for (std::size_t j = 0; j < a.cols(); ++j) v(j, 0) = rows(i, j);
        cols.push_back(std::move(v));
    }
    return cols;
}

}  // namespace klein4
