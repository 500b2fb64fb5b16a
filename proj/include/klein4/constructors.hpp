#pragma once

#include "klein4/f2poly.hpp"
#include "klein4/int_matrix.hpp"
#include "klein4/representation.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace klein4 {

// Shared block constants. NP and NL are n x (n+1), S is 2 x (n+1) with
// first row (0,...,0,1,1); D = L1 = [[1,1],[0,-1]].

namespace blocks {

inline IntMatrix E(std::size_t n) { return IntMatrix::identity(n); }
inline IntMatrix mE(std::size_t n) { return IntMatrix::scaled_identity(n, -1); }

inline IntMatrix NP(std::size_t n) {
    IntMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

inline IntMatrix NL(std::size_t n) {
    IntMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) m(i, i + 1) = 1;
    return m;
}

inline IntMatrix S(std::size_t n) {
    if (n < 1) throw std::invalid_argument("block S needs n >= 1");
    IntMatrix m(2, n + 1);
    m(0, n - 1) = 1;
    m(0, n) = 1;
    return m;
}

inline IntMatrix D() { return IntMatrix{{1, 1}, {0, -1}}; }
inline IntMatrix L1() { return D(); }

inline IntMatrix L2(std::size_t k) {
    IntMatrix m(2, k);
    if (k > 0) m(0, 0) = 1;
    return m;
}

inline IntMatrix L3(std::size_t k) {
    IntMatrix m(k, 2);
    if (k > 0) m(k - 1, 1) = 1;
    return m;
}

/// Jordan block of dimension k with ones on the main diagonal.
inline IntMatrix J1(std::size_t k) {
    IntMatrix m = IntMatrix::identity(k);
    for (std::size_t i = 0; i + 1 < k; ++i) m(i, i + 1) = 1;
    return m;
}

}  // namespace blocks

namespace detail {
inline Representation checked(IntMatrix a, IntMatrix b, Provenance p) {
    Representation rep(std::move(a), std::move(b), std::move(p));
    if (!rep.validate())
        throw std::logic_error("constructor produced an invalid representation: " +
                               rep.display_name());
    return rep;
}
}  // namespace detail

/// Delta_n, degree 4n+1 (n >= 1).
inline Representation construct_delta(int n) {
    if (n < 1) throw std::invalid_argument("Delta_n needs n >= 1");
    const auto sn = static_cast<std::size_t>(n);
    using namespace blocks;
    IntMatrix a = assemble_blocks({E(sn), E(1), mE(sn), mE(sn), E(sn)},
                                  {{0, 3, E(sn)}, {2, 4, E(sn)}});
    IntMatrix b = assemble_blocks({E(1), E(sn), mE(sn), E(sn), mE(sn)},
                                  {{1, 4, E(sn)}, {2, 3, E(sn)}});
    return detail::checked(std::move(a), std::move(b), {"Delta_n", n, {}, {}});
}

/// W_0, degree 4.
inline Representation construct_w0() {
    IntMatrix a{{1, 1, 0, 1}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    IntMatrix b{{1, 1, 1, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}};
    return detail::checked(std::move(a), std::move(b), {"W_0", 0, {}, {}});
}

/// W_n, degree 4n+4 (n >= 1; n = 0 dispatches to the separate W_0 form).
inline Representation construct_w(int n) {
    if (n < 0) throw std::invalid_argument("W_n needs n >= 0");
    if (n == 0) return construct_w0();
    const auto sn = static_cast<std::size_t>(n);
    using namespace blocks;
    IntMatrix a = assemble_blocks({D(), E(sn), mE(sn), E(sn + 1), mE(sn + 1)},
                                  {{1, 4, NL(sn)}, {2, 3, NL(sn)}});
    IntMatrix b = assemble_blocks({D(), E(sn), mE(sn), mE(sn + 1), E(sn + 1)},
                                  {{0, 3, S(sn)}, {1, 3, NP(sn)}, {2, 4, NP(sn)}});
    return detail::checked(std::move(a), std::move(b), {"W_n", n, {}, {}});
}

/// T_n, degree 4n+2 (n >= 1).
inline Representation construct_t(int n) {
    if (n < 1) throw std::invalid_argument("T_n needs n >= 1");
    const auto sn = static_cast<std::size_t>(n);
    using namespace blocks;
    IntMatrix a = assemble_blocks({E(sn + 1), mE(sn), mE(sn + 1), E(sn)},
                                  {{0, 2, E(sn + 1)}, {1, 3, E(sn)}});
    IntMatrix b = assemble_blocks({E(1), E(sn), mE(sn), E(sn + 1), mE(sn)},
                                  {{1, 4, E(sn)}, {2, 3, NP(sn)}});
    return detail::checked(std::move(a), std::move(b), {"T_n", n, {}, {}});
}

/// Delta_{n,1}, degree 4n+3 (n >= 0; at n = 0 the first block is empty).
inline Representation construct_delta_n1(int n) {
    if (n < 0) throw std::invalid_argument("Delta_{n,1} needs n >= 0");
    const auto sn = static_cast<std::size_t>(n);
    using namespace blocks;
    IntMatrix a = assemble_blocks({E(sn), mE(sn + 1), mE(sn + 1), E(sn + 1)},
                                  {{0, 2, NP(sn)}, {1, 3, E(sn + 1)}});
    IntMatrix b = assemble_blocks({E(sn), mE(sn + 1), E(sn + 1), mE(sn + 1)},
                                  {{0, 3, NL(sn)}, {1, 2, E(sn + 1)}});
    return detail::checked(std::move(a), std::move(b), {"Delta_n1", n, {}, {}});
}

/// Permutation action of the group on itself, basis {1, a, b, ab}.
inline Representation construct_regular() {
    IntMatrix a{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    IntMatrix b{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    return detail::checked(std::move(a), std::move(b), {"regular", 0, {}, {}});
}

inline Representation construct_character(Character chi) {
    IntMatrix a(1, 1), b(1, 1);
    a(0, 0) = character_sign_a(chi);
    b(0, 0) = character_sign_b(chi);
    return detail::checked(std::move(a), std::move(b), {character_name(chi), 0, {}, {}});
}

/// True for f in M_n united with {x^n, (x+1)^n}, the admissible parameters
/// of Delta_f.
inline bool delta_f_admissible(const F2Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    return f == F2Poly::x_pow(n) || f == F2Poly::x_plus_1_pow(n) || in_Mn(f);
}

/// Delta_f, degree 4n where n = deg f: one of the four off-diagonal blocks
/// U_11, U_22 (in a) / U_12, U_21 (in b) carries the companion matrix of f,
/// the other three are identities. position is one of 11, 22, 12, 21.
inline Representation construct_delta_f(const F2Poly& f, int position) {
    if (!delta_f_admissible(f))
        throw std::invalid_argument("Delta_f: polynomial not in M_n u {x^n, (x+1)^n}");
    if (position != 11 && position != 12 && position != 21 && position != 22)
        throw std::invalid_argument("Delta_f: position must be 11, 12, 21 or 22");
    const auto sn = static_cast<std::size_t>(f.degree());
    using namespace blocks;
    IntMatrix u11 = position == 11 ? companion(f) : E(sn);
    IntMatrix u22 = position == 22 ? companion(f) : E(sn);
    IntMatrix u12 = position == 12 ? companion(f) : E(sn);
    IntMatrix u21 = position == 21 ? companion(f) : E(sn);
    IntMatrix a = assemble_blocks({E(sn), mE(sn), mE(sn), E(sn)},
                                  {{0, 2, u11}, {1, 3, u22}});
    IntMatrix b = assemble_blocks({E(sn), mE(sn), E(sn), mE(sn)},
                                  {{0, 3, u12}, {1, 2, u21}});
    std::string base = position == 12 ? "F" : "Delta_f" + std::to_string(position);
    return detail::checked(std::move(a), std::move(b),
                           {base, f.degree(), f, {}});
}

/// F(f): the Delta_f with U_12 = companion(f).
inline Representation construct_F(const F2Poly& f) { return construct_delta_f(f, 12); }

/// F'(x^n) = F(x^n) (x) chi2.
inline Representation construct_Fprime(int n) {
    if (n < 1) throw std::invalid_argument("Fprime needs n >= 1");
    Representation rep = tensor_character(construct_F(F2Poly::x_pow(n)), Character::chi2);
    Provenance p{"Fprime", n, F2Poly::x_pow(n), {}};
    return Representation(rep.gen_a(), rep.gen_b(), std::move(p));
}

/// The special degree-4n form: a chain normal form with L1 corner blocks,
/// four (n-1)-sized middle blocks, a nilpotent Jordan-type hook and L2/L3
/// corner hooks. The module is a chain of n four-dimensional cells tied by
/// a rank-one shift, regrouped by coordinate type; at n = 1 the middle
/// vanishes and a single corner-to-corner entry remains. Machine-checked
/// to be indecomposable with dimension vector (2n; n,n,n,n) and locally
/// equivalent to the s2-twist of F'(x^n).
inline Representation construct_lemma3_special(int n) {
    if (n < 1) throw std::invalid_argument("lemma3special needs n >= 1");
    const auto k = static_cast<std::size_t>(n - 1);
    using namespace blocks;
    IntMatrix nsub(k, k);  // subdiagonal ones
    for (std::size_t i = 1; i < k; ++i) nsub(i, i - 1) = 1;
    IntMatrix hook_in(2, k);  // 1 at top right
    if (k > 0) hook_in(0, k - 1) = 1;
    IntMatrix hook_out(k, 2);  // 1 at top right
    if (k > 0) hook_out(0, 1) = 1;
    std::vector<std::tuple<std::size_t, std::size_t, IntMatrix>> b_off = {
        {1, 3, E(k)}, {2, 3, mE(k)}, {2, 4, E(k)},
        {1, 4, nsub}, {0, 4, hook_in}, {1, 5, hook_out}};
    if (k == 0) {
        IntMatrix corner(2, 2);
        corner(0, 1) = 1;
        b_off.push_back({0, 5, corner});
    }
    IntMatrix a = assemble_blocks({L1(), E(k), mE(k), mE(k), E(k), -L1()},
                                  {{1, 3, E(k)}, {2, 4, mE(k)}});
    IntMatrix b = assemble_blocks({L1(), E(k), E(k), mE(k), mE(k), L1()}, b_off);
    return detail::checked(std::move(a), std::move(b), {"lemma3special", n, {}, {}});
}

/// Name-dispatched construction for the CLI surface.
inline Representation construct(const std::string& name, int n = 0,
                                const F2Poly& f = F2Poly::zero(), int position = 12) {
    if (name == "Delta_n") return construct_delta(n);
    if (name == "W_0") return construct_w0();
    if (name == "W_n") return construct_w(n);
    if (name == "T_n") return construct_t(n);
    if (name == "Delta_n1") return construct_delta_n1(n);
    if (name == "regular") return construct_regular();
    if (name == "lemma3special") return construct_lemma3_special(n);
    if (name == "Fprime") return construct_Fprime(n);
    if (name == "F") {
        if (f.is_zero()) throw std::invalid_argument("construct F: missing polynomial");
        return construct_delta_f(f, position);
    }
    if (name.rfind("chi", 0) == 0) return construct_character(character_from_name(name));
    throw std::invalid_argument("unknown representation name '" + name + "'");
}

}  // namespace klein4
