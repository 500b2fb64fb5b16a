#include "klein4/automorphism.hpp"
#include "klein4/f2poly.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace klein4;

TEST_CASE("polynomial text formats") {
    F2Poly f = F2Poly::parse("111");
    CHECK(f == F2Poly::parse("x^2+x+1"));
    CHECK(f.bitstring() == "111");
    CHECK(f.human() == "x^2+x+1");
    CHECK(F2Poly::parse("001") == F2Poly::x_pow(2));
    CHECK(F2Poly::parse("01").degree() == 1);
    CHECK_THROWS_AS(F2Poly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(F2Poly::parse("x^2+y"), std::invalid_argument);
}

TEST_CASE("membership in M_n") {
    CHECK(in_Mn(F2Poly::parse("x^2+x+1")));
    CHECK(in_Mn(F2Poly::parse("x^4+x^2+1")));  // (x^2+x+1)^2
    CHECK_FALSE(in_Mn(F2Poly::parse("x^2+x")));
    CHECK_FALSE(in_Mn(F2Poly::parse("x")));
    CHECK_FALSE(in_Mn(F2Poly::parse("x+1")));
    CHECK_THROWS_AS(in_Mn(F2Poly::zero()), std::invalid_argument);
}

TEST_CASE("membership agrees with the brute-force oracle") {
    for (int n = 1; n <= 10; ++n)
        for (std::uint64_t low = 0; low < (std::uint64_t(1) << n); ++low) {
            F2Poly f(low | (std::uint64_t(1) << n));
            CHECK(in_Mn(f) == oracles::in_Mn_oracle(f));
        }
}

TEST_CASE("enumerating M_n") {
    CHECK(enumerate_Mn(1).empty());

    auto m2 = enumerate_Mn(2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == F2Poly::parse("111"));

    auto m4 = enumerate_Mn(4);
    REQUIRE(m4.size() == 4);
    std::vector<std::string> bits;
    for (const auto& f : m4) bits.push_back(f.bitstring());
    CHECK(std::is_sorted(bits.begin(), bits.end()));
    for (const char* s : {"11001", "10011", "11111", "10101"})
        CHECK(std::find(bits.begin(), bits.end(), s) != bits.end());
}

TEST_CASE("automorphism group is S3") {
    const auto& all = Automorphism::all();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) CHECK(all[i] != all[j]);
    CHECK(Automorphism::s1() * Automorphism::s1() == Automorphism::id());
    CHECK(Automorphism::s2() * Automorphism::s2() == Automorphism::id());
    Automorphism s1s2 = Automorphism::s1() * Automorphism::s2();
    CHECK(s1s2 * s1s2 * s1s2 == Automorphism::id());
    // the braid relation collapses the two three-letter words
    CHECK(Automorphism::s1() * Automorphism::s2() * Automorphism::s1() ==
          Automorphism::s2() * Automorphism::s1() * Automorphism::s2());
    for (const auto& phi : all) {
        CHECK(Automorphism::from_word(phi.word_string()) == phi);
        CHECK(phi * phi.inverse() == Automorphism::id());
    }
    CHECK_THROWS_AS(Automorphism::from_word("s3"), std::invalid_argument);
}

TEST_CASE("sigma action examples") {
    CHECK(apply_sigma(F2Poly::parse("x^2+x+1"), Automorphism::s1()) ==
          F2Poly::parse("x^2+x+1"));
    CHECK(apply_sigma(F2Poly::parse("x^3+x+1"), Automorphism::s2()) ==
          F2Poly::parse("x^3+x^2+1"));
    CHECK(apply_sigma(F2Poly::parse("x^3+x+1"), Automorphism::id()) ==
          F2Poly::parse("x^3+x+1"));
    // literal reciprocal drops the degree when f(0) = 0
    CHECK(apply_sigma(F2Poly::x_pow(3), Automorphism::s1()) == F2Poly::one());
}

TEST_CASE("generators act as involutions on M_n") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& f : enumerate_Mn(n)) {
            CHECK(apply_sigma(apply_sigma(f, Automorphism::s1()), Automorphism::s1()) == f);
            CHECK(apply_sigma(apply_sigma(f, Automorphism::s2()), Automorphism::s2()) == f);
        }
}

TEST_CASE("the action law holds on M_n") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& f : enumerate_Mn(n))
            for (const auto& phi : Automorphism::all())
                for (const auto& psi : Automorphism::all())
                    CHECK(apply_sigma(f, phi * psi) ==
                          apply_sigma(apply_sigma(f, psi), phi));
}

TEST_CASE("orbit partition") {
    CHECK(orbits(1).empty());

    auto o2 = orbits(2);
    REQUIRE(o2.size() == 1);
    CHECK(o2[0].members.size() == 1);
    CHECK(o2[0].stabilizer.size() == 6);

    auto o3 = orbits(3);
    REQUIRE(o3.size() == 1);
    REQUIRE(o3[0].members.size() == 2);
    CHECK(o3[0].members[0] == F2Poly::parse("x^3+x^2+1"));
    CHECK(o3[0].members[1] == F2Poly::parse("x^3+x+1"));
    CHECK(o3[0].stabilizer.size() == 3);

    for (int n = 2; n <= 8; ++n) {
        auto all = enumerate_Mn(n);
        std::size_t covered = 0;
        for (const auto& orb : orbits(n)) {
            CHECK(orb.members.size() * orb.stabilizer.size() == 6);
            for (const auto& f : orb.members) {
                CHECK(std::binary_search(all.begin(), all.end(), f));
                ++covered;
            }
            CHECK(orb.representative == orb.members.front());
        }
        CHECK(covered == all.size());
    }
}

TEST_CASE("companion matrices") {
    CHECK(companion(F2Poly::parse("111")) == IntMatrix{{0, 1}, {1, 1}});
    CHECK(companion(F2Poly::parse("001")) == IntMatrix{{0, 0}, {1, 0}});
    CHECK(companion(F2Poly::parse("11")) == IntMatrix{{1}});
    CHECK_THROWS_AS(companion(F2Poly::one()), std::invalid_argument);
}

TEST_CASE("characteristic polynomial of the companion matrix is f") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<F2Poly> pool = n >= 2 ? enumerate_Mn(n) : std::vector<F2Poly>{};
        pool.push_back(F2Poly::x_pow(n));
        pool.push_back(F2Poly::x_plus_1_pow(n));
        for (const auto& f : pool) {
            std::vector<Int> chi = oracles::charpoly_int(companion(f));
            for (int k = 0; k <= n; ++k) {
                bool bit = ((chi[static_cast<std::size_t>(k)] % 2) + 2) % 2 == 1;
                CHECK(bit == f.coeff(k));
            }
        }
    }
}
