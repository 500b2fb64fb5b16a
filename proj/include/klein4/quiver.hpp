#pragma once

#include "klein4/f2_matrix.hpp"
#include "klein4/int_matrix.hpp"
#include "klein4/representation.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein4 {

/// F2-dimension data (d0; d1, d2, d3, d4) of the five-subspace diagram
/// attached to a representation. Component i >= 1 belongs to the primitive
/// idempotent e_i with sign pattern e1:(+,+), e2:(-,-), e3:(+,-), e4:(-,+).
struct DimensionVector {
    std::array<long, 5> d{0, 0, 0, 0, 0};

    long& operator[](std::size_t i) { return d[i]; }
    long operator[](std::size_t i) const { return d[i]; }
    bool operator==(const DimensionVector& o) const { return d == o.d; }
    bool operator!=(const DimensionVector& o) const { return d != o.d; }

    long weight() const { return d[1] + d[2] + d[3] + d[4]; }

    std::string to_string() const {
        std::string s = "(" + std::to_string(d[0]) + ";";
        for (int i = 1; i < 5; ++i) s += (i > 1 ? "," : "") + std::to_string(d[i]);
        return s + ")";
    }
};

/// The quadratic form of the five-point star graph:
/// B(x) = x0^2 + x1^2 + ... + x4^2 - x0 (x1 + x2 + x3 + x4).
inline long form_B(const DimensionVector& x) {
    long s = x[0] * x[0];
    long cross = 0;
    for (std::size_t i = 1; i < 5; ++i) {
        s += x[i] * x[i];
        cross += x[i];
    }
    return s - x[0] * cross;
}

/// The sign patterns of the four primitive idempotents, in e_1..e_4 order.
inline constexpr std::array<std::pair<int, int>, 4> idempotent_signs{
    {{+1, +1}, {-1, -1}, {+1, -1}, {-1, +1}}};

struct Lemma1Report {
    std::array<bool, 4> pattern_ok{false, false, false, false};
    bool ok() const {
        return pattern_ok[0] && pattern_ok[1] && pattern_ok[2] && pattern_ok[3];
    }
};

/// Checks (E +- A)(E +- B) = 0 mod 2 for all four sign patterns; a failure
/// signals a regular direct summand.
inline Lemma1Report check_lemma1(const Representation& rep) {
    const std::size_t m = rep.degree();
    const IntMatrix e = IntMatrix::identity(m);
    Lemma1Report out;
    for (std::size_t i = 0; i < 4; ++i) {
        auto [sa, sb] = idempotent_signs[i];
        IntMatrix p = (e + sa * rep.gen_a()) * (e + sb * rep.gen_b());
        out.pattern_ok[i] = p.divisible_by(2);
    }
    return out;
}

/// The five subspaces of F2^m: V0 and V1..V4, each stored as an rref row
/// basis. Every V_i is contained in V0.
struct SubspaceTuple {
    std::size_t ambient = 0;
    F2Matrix v0;
    std::array<F2Matrix, 4> v;
};

/// Dimension vector of a representation satisfying the Lemma-1 condition.
///
/// For each idempotent pattern form the integer matrix W_i = (E±A)(E±B)/2
/// (entrywise exact once Lemma 1 holds). The subspace V_i = (e_i M + M)/M
/// sits inside (1/2 M)/M = F2^m as the span of the images e_i(basis vector),
/// i.e. the column space of W_i mod 2; V0 is the sum of the four column
/// spaces. d_i is the F2-dimension.
inline std::pair<DimensionVector, SubspaceTuple> dimension_vector(const Representation& rep) {
    Lemma1Report lem = check_lemma1(rep);
    if (!lem.ok())
        throw std::domain_error("dimension_vector: Lemma 1 fails (regular direct summand)");
    const std::size_t m = rep.degree();
    const IntMatrix e = IntMatrix::identity(m);

    DimensionVector d;
    SubspaceTuple spaces;
    spaces.ambient = m;
    F2Matrix stacked(0, m);
    for (std::size_t i = 0; i < 4; ++i) {
        auto [sa, sb] = idempotent_signs[i];
        IntMatrix w = ((e + sa * rep.gen_a()) * (e + sb * rep.gen_b())).divided_by(2);
        // columns of w mod 2 span V_i; work with rows of the transpose
        F2Matrix cols = F2Matrix::from_mod2(w).transpose();
        auto [rank, basis] = f2_row_space(cols);
        d[i + 1] = static_cast<long>(rank);
        spaces.v[i] = basis;
        stacked = F2Matrix::stack(stacked, cols);
    }
    auto [rank0, basis0] = f2_row_space(stacked);
    d[0] = static_cast<long>(rank0);
    spaces.v0 = basis0;
    return {d, spaces};
}

/// A dimension vector with B = 1 and nonnegative components.
struct Root {
    DimensionVector d;
};

namespace detail {
inline bool integer_sqrt(long v, long& out) {
    if (v < 0) return false;
    long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    out = r;
    return r * r == v;
}
}  // namespace detail

/// All positive roots with d1+d2+d3+d4 = m: scan the last four components
/// and solve the quadratic in d0 exactly. Deterministic order: (d1,d2,d3)
/// lexicographic, then d0 ascending.
inline std::vector<Root> enumerate_roots(long m) {
    if (m < 0) throw std::invalid_argument("enumerate_roots: m must be >= 0");
    std::vector<Root> out;
    for (long d1 = 0; d1 <= m; ++d1)
        for (long d2 = 0; d1 + d2 <= m; ++d2)
            for (long d3 = 0; d1 + d2 + d3 <= m; ++d3) {
                long d4 = m - d1 - d2 - d3;
                long q = d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4;
                // B = d0^2 - m d0 + q - 1 = 0
                long disc = m * m - 4 * (q - 1);
                long t;
                if (!detail::integer_sqrt(disc, t)) continue;
                for (long d0 : {(m - t) / 2, (m + t) / 2}) {
                    if (2 * d0 != m - t && 2 * d0 != m + t) continue;  // parity
                    if (d0 < 0) continue;
                    if (t == 0 && d0 == (m + t) / 2 && !out.empty() &&
                        out.back().d == DimensionVector{{(m - t) / 2, d1, d2, d3, d4}})
                        continue;  // double root, emit once
                    DimensionVector d{{d0, d1, d2, d3, d4}};
                    if (form_B(d) != 1)
                        throw std::logic_error("enumerate_roots: solver bug");
                    out.push_back(Root{d});
                }
            }
    return out;
}

/// The seven parametric root families. Entries encode mul*n + add for
/// (d0; d1..d4); m_residue/m_offset describe the degree the family's
/// printed table row assigns to it.
struct RootFamily {
    int index;                 // 1..7
    std::array<int, 5> mul;    // coefficient of n per component
    std::array<int, 5> add;    // constant per component
    long expected_t;           // printed permutation count
};

inline const std::array<RootFamily, 7>& root_families() {
    static const std::array<RootFamily, 7> fams = {{
        {1, {2, 1, 1, 1, 1}, {1, 0, 0, 0, 0}, 1},   // (2n+1; n,n,n,n)
        {2, {2, 1, 1, 1, 1}, {-1, 0, 0, 0, 0}, 1},  // (2n-1; n,n,n,n)
        {3, {2, 1, 1, 1, 1}, {1, 1, 1, 0, 0}, 6},   // (2n+1; n+1,n+1,n,n)
        {4, {2, 1, 1, 1, 1}, {0, 1, 0, 0, 0}, 4},   // (2n; n+1,n,n,n)
        {5, {2, 1, 1, 1, 1}, {1, 1, 0, 0, 0}, 4},   // (2n+1; n+1,n,n,n)
        {6, {2, 1, 1, 1, 1}, {2, 1, 1, 1, 0}, 4},   // (2n+2; n+1,n+1,n+1,n)
        {7, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 0}, 4},   // (2n+1; n+1,n+1,n+1,n)
    }};
    return fams;
}

struct FamilyInstance {
    int family = 0;
    long n = 0;
    DimensionVector pattern;  // canonical (unpermuted) member
    long count = 0;           // roots matching up to permutation of d1..d4
    long expected_t = 0;
    bool in_printed_range = false;  // printed rows state n >= 1
};

struct Table1Report {
    long m = 0;
    std::vector<FamilyInstance> families;
    std::vector<Root> unmatched;  // filtered roots matching no family
    std::size_t filtered_out = 0; // roots with d0 < 1 or weight < 2

    bool counts_ok() const {
        for (const auto& f : families)
            if (f.in_printed_range && f.count != f.expected_t) return false;
        return unmatched.empty();
    }
};

namespace detail {
inline std::array<long, 4> sorted_tail(const DimensionVector& d) {
    std::array<long, 4> t{d[1], d[2], d[3], d[4]};
    std::sort(t.begin(), t.end());
    return t;
}
}  // namespace detail

/// Groups the filtered roots of weight m into the seven families up to
/// permutation of the last four components, n >= 0 allowed; counts are
/// compared against the printed t(m) for instances with n >= 1.
inline Table1Report table1_families(long m) {
    if (m < 2) throw std::invalid_argument("table1_families: m must be >= 2");
    Table1Report report;
    report.m = m;
    for (const Root& r : enumerate_roots(m)) {
        if (r.d[0] < 1 || r.d.weight() < 2) {
            ++report.filtered_out;
            continue;
        }
        bool matched = false;
        for (const auto& fam : root_families()) {
            for (long n = 0; 4 * n <= m + 4 && !matched; ++n) {
                DimensionVector pat;
                bool nonneg = true;
                for (std::size_t i = 0; i < 5; ++i) {
                    pat[i] = fam.mul[i] * n + fam.add[i];
                    nonneg = nonneg && pat[i] >= 0;
                }
                if (!nonneg || pat.weight() != m) continue;
                if (pat[0] != r.d[0] || detail::sorted_tail(pat) != detail::sorted_tail(r.d))
                    continue;
                matched = true;
                auto it = std::find_if(report.families.begin(), report.families.end(),
                                       [&](const FamilyInstance& fi) {
                                           return fi.family == fam.index && fi.n == n;
                                       });
                if (it == report.families.end()) {
                    report.families.push_back(
                        {fam.index, n, pat, 1, fam.expected_t, n >= 1});
                } else {
                    ++it->count;
                }
            }
            if (matched) break;
        }
        if (!matched) report.unmatched.push_back(r);
    }
    return report;
}

}  // namespace klein4
