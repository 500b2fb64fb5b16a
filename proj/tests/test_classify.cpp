#include "klein4/classify.hpp"
#include "klein4/verify.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace klein4;

namespace {

bool lattice_contains(const MatrixLattice& lat, const IntMatrix& x) {
    const std::size_t m = lat.degree;
    IntMatrix rows(lat.rank(), m * m);
    for (std::size_t r = 0; r < lat.rank(); ++r)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) rows(r, i * m + j) = lat.basis[r](i, j);
    std::vector<Int> v(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) v[i * m + j] = x(i, j);
    return oracles::in_integer_row_span(rows, v);
}

}  // namespace

TEST_CASE("endomorphism lattices") {
    Representation split = direct_sum(construct_character(Character::chi1),
                                      construct_character(Character::chi2));
    MatrixLattice lat = endomorphism_lattice(split);
    CHECK(lat.rank() == 2);
    CHECK(endomorphism_lattice(construct_character(Character::chi1)).rank() == 1);

    for (const Representation& rep :
         {construct_delta(1), construct_w0(), construct_t(1), split}) {
        MatrixLattice l = endomorphism_lattice(rep);
        CHECK(lattice_contains(l, IntMatrix::identity(rep.degree())));
        for (const IntMatrix& x : l.basis) {
            CHECK(x * rep.gen_a() == rep.gen_a() * x);
            CHECK(x * rep.gen_b() == rep.gen_b() * x);
        }
    }
}

TEST_CASE("intertwiner lattices") {
    Representation d1 = construct_delta(1);
    CHECK(intertwiner_lattice(d1, d1).rank() == endomorphism_lattice(d1).rank());
    CHECK(intertwiner_lattice(construct_character(Character::chi1),
                              construct_character(Character::chi2))
              .rank() == 0);
    // rank is symmetric in the two arguments
    Representation t1c = tensor_character(construct_t(1), Character::chi2);
    Representation t1 = construct_t(1);
    CHECK(intertwiner_lattice(t1, t1c).rank() == intertwiner_lattice(t1c, t1).rank());
    for (const IntMatrix& x : intertwiner_lattice(t1, t1c).basis) {
        CHECK(x * t1.gen_a() == t1c.gen_a() * x);
        CHECK(x * t1.gen_b() == t1c.gen_b() * x);
    }
    CHECK_THROWS_AS(intertwiner_lattice(d1, t1), std::invalid_argument);
}

TEST_CASE("indecomposability") {
    CHECK(is_indecomposable(construct_w0()));
    CHECK(is_indecomposable(construct_regular()));
    CHECK_FALSE(is_indecomposable(direct_sum(construct_character(Character::chi1),
                                             construct_character(Character::chi2))));
    CHECK_FALSE(is_indecomposable(
        direct_sum(construct_delta(1), construct_character(Character::chi3))));
    CHECK_FALSE(is_indecomposable(
        direct_sum(construct_F(F2Poly::x()), construct_F(F2Poly::x()))));
}

TEST_CASE("indecomposability agrees with the exhaustive idempotent scan") {
    std::vector<Representation> zoo = {
        construct_character(Character::chi1),
        construct_regular(),
        construct_delta(1),
        construct_w0(),
        construct_w(1),
        construct_t(1),
        construct_delta_n1(0),
        construct_F(F2Poly::parse("111")),
        construct_Fprime(2),
        construct_lemma3_special(2),
        direct_sum(construct_character(Character::chi1), construct_character(Character::chi2)),
        direct_sum(construct_delta(1), construct_character(Character::chi3)),
        direct_sum(construct_F(F2Poly::x()), construct_F(F2Poly::x())),
        direct_sum(construct_regular(), construct_regular()),
        direct_sum(construct_w0(), construct_character(Character::chi2)),
    };
    for (const auto& rep : zoo) {
        INFO(rep.display_name());
        CHECK(is_indecomposable(rep) == detail::is_indecomposable_exhaustive(rep));
    }
}

TEST_CASE("local equivalence") {
    Representation d1 = construct_delta(1);
    CHECK(equivalent_local(d1, d1));
    CHECK(equivalent_local(d1, conjugate(d1, Automorphism::s1())));
    Representation d1chi = tensor_character(d1, Character::chi2);
    CHECK_FALSE(equivalent_local(d1chi, conjugate(d1chi, Automorphism::s2())));
    CHECK_FALSE(equivalent_local(construct_character(Character::chi1),
                                 construct_character(Character::chi2)));
    CHECK_THROWS_AS(equivalent_local(d1, construct_w0()), std::invalid_argument);

    // symmetric on a sample
    Representation w0 = construct_w0();
    Representation f = construct_F(F2Poly::x());
    CHECK(equivalent_local(w0, f) == equivalent_local(f, w0));
}

TEST_CASE("local equivalence agrees with the exhaustive scan") {
    std::vector<Representation> zoo = {
        construct_w0(),
        contragredient(construct_w0()),
        construct_F(F2Poly::x()),
        construct_F(F2Poly::x_plus_1_pow(1)),
        construct_Fprime(1),
        conjugate(construct_F(F2Poly::x()), Automorphism::s1()),
        conjugate(construct_Fprime(1), Automorphism::s2()),
        construct_lemma3_special(1),
        construct_regular(),
        direct_sum(construct_character(Character::chi1), construct_regular()),
    };
    for (const auto& r1 : zoo)
        for (const auto& r2 : zoo) {
            if (r1.degree() != r2.degree()) continue;
            MatrixLattice lat = intertwiner_lattice(r1, r2);
            if (lat.rank() > 16) continue;
            bool fast = equivalent_local(r1, r2);
            bool slow = lat.rank() > 0 &&
                        detail::gray_scan(detail::mod2_basis(lat), r1.degree(),
                                          [](const F2Matrix& x) { return x.invertible(); });
            CHECK(fast == slow);
        }
}

TEST_CASE("global equivalence") {
    Representation d1 = construct_delta(1);
    GlobalEquivalence same = equivalent_global(d1, d1, 1);
    CHECK(same.verdict == GlobalVerdict::yes);
    REQUIRE(same.witness);
    CHECK(same.witness->is_identity());

    CHECK(equivalent_global(construct_character(Character::chi1),
                            construct_character(Character::chi2), 3)
              .verdict == GlobalVerdict::no);

    GlobalEquivalence conj = equivalent_global(d1, conjugate(d1, Automorphism::s1()), 2);
    CHECK(conj.verdict == GlobalVerdict::yes);
    REQUIRE(conj.witness);
    Representation target = conjugate(d1, Automorphism::s1());
    CHECK(*conj.witness * d1.gen_a() == target.gen_a() * *conj.witness);
    CHECK(*conj.witness * d1.gen_b() == target.gen_b() * *conj.witness);
    Int dt = det(*conj.witness);
    CHECK((dt == 1 || dt == -1));

    // oversized search boxes are refused rather than truncated
    Representation reg2 = direct_sum(construct_regular(), construct_regular());
    Representation reg2c = conjugate(reg2, Automorphism::s1());
    CHECK_THROWS_AS(equivalent_global(reg2, reg2c, 1000), ResourceCapError);
}

TEST_CASE("stabilizers") {
    StabilizerResult t1 = stabilizer(construct_t(1));
    CHECK(t1.index == 3);
    REQUIRE(t1.st.size() == 2);
    CHECK(tables::same_subgroup(
        t1.st, {Automorphism::id(), Automorphism::s1() * Automorphism::s2() * Automorphism::s1()}));

    StabilizerResult w0 = stabilizer(construct_w0());
    CHECK(w0.index == 1);
    CHECK(w0.st.size() == 6);

    StabilizerResult ff = stabilizer(construct_F(F2Poly::parse("111")));
    CHECK(ff.st.size() == 6);
    CHECK(ff.index == 1);
}

TEST_CASE("subgroup conjugacy") {
    Representation d1 = construct_delta(1);
    for (const auto& phi : Automorphism::all())
        CHECK(conjugate_subgroups(d1, conjugate(d1, phi)));
    CHECK_FALSE(conjugate_subgroups(d1, contragredient(d1)));
    CHECK_FALSE(conjugate_subgroups(construct_F(F2Poly::x()), construct_Fprime(1)));
}

TEST_CASE("degree enumeration") {
    CHECK(enumerate_degree(1).empty());
    CHECK(enumerate_degree(2).empty());
    auto m5 = enumerate_degree(5);
    REQUIRE(m5.size() == 4);
    CHECK(m5[0].row == "Delta_n");
    CHECK(m5[1].row == "Delta_n^*");
    CHECK(m5[2].row == "Delta_n@chi2");
    CHECK(m5[3].row == "Delta_n^*@chi2");
    auto m4 = enumerate_degree(4);
    REQUIRE(m4.size() == 5);
    CHECK(m4[4].row == "regular");
    CHECK_FALSE(m4[4].dimvec.has_value());
}

TEST_CASE("expansion to equivalence classes") {
    auto m5 = enumerate_degree(5);
    CHECK(expand_to_equivalence(m5[0]).size() == 1);  // Delta_1
    CHECK(expand_to_equivalence(m5[2]).size() == 3);  // Delta_1 (x) chi2
    auto m6 = enumerate_degree(6);
    CHECK(expand_to_equivalence(m6[0]).size() == 3);  // T_1
}

TEST_CASE("lemma3 layer") {
    Lemma3Report r1 = verify_lemma3(1);
    CHECK(r1.ok());
    REQUIRE(r1.special_twist.has_value());
    CHECK(*r1.special_twist == Automorphism::s2());

    Lemma3Report r2 = verify_lemma3(2);
    CHECK(r2.ok());
    CHECK(*r2.special_twist == Automorphism::s2());
}

TEST_CASE("local equivalence is an equivalence relation on twist orbits") {
    auto m6 = enumerate_degree(6);
    std::vector<Representation> pool;
    for (const auto& phi : Automorphism::all()) pool.push_back(conjugate(m6[0].rep, phi));
    for (const auto& x : pool) CHECK(equivalent_local(x, x));  // reflexive
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            CHECK(equivalent_local(pool[i], pool[j]) ==
                  equivalent_local(pool[j], pool[i]));  // symmetric
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            for (std::size_t k = 0; k < pool.size(); ++k)
                if (equivalent_local(pool[i], pool[j]) && equivalent_local(pool[j], pool[k]))
                    CHECK(equivalent_local(pool[i], pool[k]));  // transitive
}

TEST_CASE("verification report surfaces") {
    auto t1 = verify_table1(3);
    CHECK(all_match(t1));

    auto t2 = verify_table2(1);
    CHECK_FALSE(all_match(t2));  // the three known misprinted rows
    int mismatches = 0;
    for (const auto& r : t2)
        if (r.verdict == "mismatch") ++mismatches;
    CHECK(mismatches == 3);

    auto l3 = lemma3_reports(1);
    CHECK(all_match(l3));
}
