#pragma once

#include "klein4/classify.hpp"
#include "klein4/quiver.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace klein4 {

/// One verification record: a claim from the built-in reference tables, the
/// computed value, the printed value, and the comparison verdict.
struct Report {
    std::string claim;
    std::string paper_location;
    std::string computed;
    std::string printed;
    std::string verdict;  // "match" | "mismatch" | "unknown"
};

inline bool all_match(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (r.verdict == "mismatch") return false;
    return true;
}

namespace tables {

/// d-pattern entry: value = mul * n + add per component.
struct DPattern {
    std::array<int, 5> mul;
    std::array<int, 5> add;
    DimensionVector at(int n) const {
        DimensionVector d;
        for (std::size_t i = 0; i < 5; ++i) d[i] = mul[i] * n + add[i];
        return d;
    }
    std::string to_string() const {
        auto comp = [&](std::size_t i) {
            std::string s;
            if (mul[i] == 1) s = "n";
            else if (mul[i] == 2) s = "2n";
            else if (mul[i] != 0) s = std::to_string(mul[i]) + "n";
            if (add[i] > 0) s += (s.empty() ? "" : "+") + std::to_string(add[i]);
            else if (add[i] < 0) s += std::to_string(add[i]);
            if (s.empty()) s = "0";
            return s;
        };
        std::string s = "(" + comp(0) + ";";
        for (std::size_t i = 1; i < 5; ++i) s += (i > 1 ? "," : "") + comp(i);
        return s + ")";
    }
};

enum class StKind { full, gen_s1, gen_s1s2s1, from_poly };

inline std::vector<Automorphism> subgroup_elements(StKind kind, const std::optional<F2Poly>& f) {
    switch (kind) {
        case StKind::full: {
            const auto& all = Automorphism::all();
            return {all.begin(), all.end()};
        }
        case StKind::gen_s1:
            return {Automorphism::id(), Automorphism::s1()};
        case StKind::gen_s1s2s1:
            return {Automorphism::id(), Automorphism::s1() * Automorphism::s2() * Automorphism::s1()};
        case StKind::from_poly:
            return poly_stabilizer(*f);
    }
    throw std::logic_error("subgroup_elements");
}

inline std::string subgroup_to_string(const std::vector<Automorphism>& st) {
    std::vector<int> idx;
    for (const auto& phi : st) idx.push_back(phi.canonical_index());
    std::sort(idx.begin(), idx.end());
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? "," : "") +
             Automorphism::all()[static_cast<std::size_t>(idx[i])].word_string();
    return s + "}";
}

inline bool same_subgroup(const std::vector<Automorphism>& a, const std::vector<Automorphism>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a)
        if (std::find(b.begin(), b.end(), p) == b.end()) return false;
    return true;
}

/// A representation family appearing as a printed table row.
struct Row {
    std::string name;
    int n_min;
    std::function<Representation(int)> build;
    std::optional<DPattern> d_table2;
    std::optional<DPattern> d_table3;
    StKind st;
    long S;
};

inline const std::vector<Row>& rows() {
    auto dual = [](Representation r) { return contragredient(r); };
    auto chi2 = [](Representation r) { return tensor_character(r, Character::chi2); };
    static const std::vector<Row> all = {
        {"Delta_n", 1, [](int n) { return construct_delta(n); },
         DPattern{{2, 1, 1, 1, 1}, {1, 1, 0, 0, 0}}, DPattern{{2, 1, 1, 1, 1}, {1, 1, 0, 0, 0}},
         StKind::full, 1},
        {"Delta_n^*", 1, [dual](int n) { return dual(construct_delta(n)); },
         DPattern{{2, 1, 1, 1, 1}, {1, 1, 0, 0, 0}}, DPattern{{2, 1, 1, 1, 1}, {1, 1, 0, 0, 0}},
         StKind::full, 1},
        {"Delta_n@chi2", 1, [chi2](int n) { return chi2(construct_delta(n)); },
         DPattern{{2, 1, 1, 1, 1}, {0, 0, 1, 0, 0}}, DPattern{{2, 1, 1, 1, 1}, {1, 0, 1, 0, 0}},
         StKind::gen_s1, 3},
        {"Delta_n^*@chi2", 1, [dual, chi2](int n) { return chi2(dual(construct_delta(n))); },
         DPattern{{2, 1, 1, 1, 1}, {0, 0, 1, 0, 0}}, DPattern{{2, 1, 1, 1, 1}, {0, 0, 1, 0, 0}},
         StKind::gen_s1, 3},
        {"Delta_n1", 0, [](int n) { return construct_delta_n1(n); },
         DPattern{{2, 1, 1, 1, 1}, {1, 0, 1, 1, 1}}, DPattern{{2, 1, 1, 1, 1}, {1, 0, 1, 1, 1}},
         StKind::full, 1},
        {"Delta_n1^*", 0, [dual](int n) { return dual(construct_delta_n1(n)); },
         DPattern{{2, 1, 1, 1, 1}, {2, 0, 1, 1, 1}}, DPattern{{2, 1, 1, 1, 1}, {2, 0, 1, 1, 1}},
         StKind::full, 1},
        {"Delta_n1@chi2", 0, [chi2](int n) { return chi2(construct_delta_n1(n)); },
         DPattern{{2, 1, 1, 1, 1}, {1, 1, 0, 1, 1}}, DPattern{{2, 1, 1, 1, 1}, {1, 1, 0, 1, 1}},
         StKind::gen_s1, 3},
        {"Delta_n1^*@chi2", 0, [dual, chi2](int n) { return chi2(dual(construct_delta_n1(n))); },
         DPattern{{2, 1, 1, 1, 1}, {2, 1, 0, 1, 1}}, DPattern{{2, 1, 1, 1, 1}, {2, 1, 0, 1, 1}},
         StKind::gen_s1, 3},
        {"T_n", 1, [](int n) { return construct_t(n); },
         DPattern{{2, 1, 1, 1, 1}, {1, 1, 0, 0, 1}}, DPattern{{2, 1, 1, 1, 1}, {1, 1, 0, 1, 0}},
         StKind::gen_s1s2s1, 3},
        {"T_n@chi2", 1, [chi2](int n) { return chi2(construct_t(n)); },
         DPattern{{2, 1, 1, 1, 1}, {1, 0, 1, 0, 1}}, DPattern{{2, 1, 1, 1, 1}, {1, 0, 1, 0, 1}},
         StKind::gen_s1s2s1, 3},
        {"W_n", 0, [](int n) { return construct_w(n); },
         DPattern{{2, 1, 1, 1, 1}, {1, 1, 1, 1, 1}}, DPattern{{2, 1, 1, 1, 1}, {1, 1, 1, 1, 1}},
         StKind::full, 1},
        {"W_n^*", 0, [dual](int n) { return dual(construct_w(n)); },
         DPattern{{2, 1, 1, 1, 1}, {3, 1, 1, 1, 1}}, DPattern{{2, 1, 1, 1, 1}, {3, 1, 1, 1, 1}},
         StKind::full, 1},
    };
    return all;
}

}  // namespace tables

/// Root-count verification: for every weight m <= 4*max_n + 2, the filtered
/// positive roots must partition into the seven parametric families with
/// permutation counts matching the printed t(m) for instances with n >= 1.
inline std::vector<Report> verify_table1(int max_n) {
    std::vector<Report> out;
    for (long m = 2; m <= 4L * max_n + 2; ++m) {
        Table1Report rep = table1_families(m);
        for (const auto& fam : rep.families) {
            Report r;
            r.claim = "root count t(m) for family " + fam.pattern.to_string() + " at m=" +
                      std::to_string(m) + ", n=" + std::to_string(fam.n);
            r.paper_location = "table1/family" + std::to_string(fam.family) +
                               (fam.in_printed_range ? "" : "/outside-printed-range");
            r.computed = std::to_string(fam.count);
            r.printed = std::to_string(fam.expected_t);
            if (fam.count == fam.expected_t)
                r.verdict = "match";
            else
                r.verdict = fam.in_printed_range ? "mismatch" : "unknown";
            out.push_back(std::move(r));
        }
        if (!rep.unmatched.empty()) {
            Report r;
            r.claim = "all filtered roots of weight " + std::to_string(m) +
                      " lie in the seven families";
            r.paper_location = "table1";
            r.computed = std::to_string(rep.unmatched.size()) + " unmatched roots, first " +
                         rep.unmatched.front().d.to_string();
            r.printed = "0 unmatched";
            r.verdict = "mismatch";
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Dimension-vector verification against the printed table of d(Gamma)
/// values, one report per row instance.
inline std::vector<Report> verify_table2(int max_n) {
    std::vector<Report> out;
    for (const auto& row : tables::rows()) {
        if (!row.d_table2) continue;
        for (int n = row.n_min; n <= max_n; ++n) {
            Representation rep = row.build(n);
            DimensionVector computed = dimension_vector(rep).first;
            DimensionVector printed = row.d_table2->at(n);
            Report r;
            r.claim = "d(" + row.name + ") at n=" + std::to_string(n);
            r.paper_location = "table2/" + row.name;
            r.computed = computed.to_string();
            r.printed = printed.to_string() + " [pattern " + row.d_table2->to_string() + "]";
            r.verdict = computed == printed ? "match" : "mismatch";
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Classification-table verification: dimension vector (where printed),
/// stabilizer and S per row instance; one report per instance.
inline std::vector<Report> verify_table3(int max_n) {
    std::vector<Report> out;
    auto emit = [&](const std::string& name, int n, const Representation& rep,
                    const std::optional<DimensionVector>& printed_d,
                    const std::vector<Automorphism>& printed_st, long printed_S,
                    const std::string& location) {
        StabilizerResult st = stabilizer(rep);
        std::optional<DimensionVector> computed_d;
        if (check_lemma1(rep).ok()) computed_d = dimension_vector(rep).first;
        std::string comp, prnt;
        bool ok = true;
        if (printed_d) {
            comp += "d=" + (computed_d ? computed_d->to_string() : "-") + " ";
            prnt += "d=" + printed_d->to_string() + " ";
            ok = ok && computed_d && *computed_d == *printed_d;
        }
        comp += "St=" + tables::subgroup_to_string(st.st) + " S=" + std::to_string(st.index);
        prnt += "St=" + tables::subgroup_to_string(printed_st) + " S=" + std::to_string(printed_S);
        ok = ok && tables::same_subgroup(st.st, printed_st) && st.index == printed_S;
        out.push_back(Report{name + " at n=" + std::to_string(n), location, comp, prnt,
                             ok ? "match" : "mismatch"});
    };

    for (const auto& row : tables::rows()) {
        for (int n = row.n_min; n <= max_n; ++n)
            emit(row.name, n, row.build(n),
                 row.d_table3 ? std::optional<DimensionVector>(row.d_table3->at(n))
                              : std::nullopt,
                 tables::subgroup_elements(row.st, {}), row.S, "table3/" + row.name);
    }
    for (int n = 1; n <= max_n; ++n) {
        for (const OrbitRecord& orb : orbits(n)) {
            std::vector<Automorphism> printed_st = orb.stabilizer;
            emit("F(f), f=" + orb.representative.bitstring(), n,
                 construct_F(orb.representative), {}, printed_st,
                 static_cast<long>(6 / printed_st.size()), "table3/F(f)");
        }
        std::vector<Automorphism> st_xn = {Automorphism::id(),
                                           Automorphism::s2() * Automorphism::s1() *
                                               Automorphism::s2()};
        emit("F(x^n)", n, construct_F(F2Poly::x_pow(n)), {}, st_xn, 3, "table3/F(x^n)");
        emit("F'(x^n)", n, construct_Fprime(n), {}, st_xn, 3, "table3/Fprime(x^n)");
    }
    {
        const auto& all = Automorphism::all();
        emit("regular", 0, construct_regular(), {},
             std::vector<Automorphism>(all.begin(), all.end()), 1, "table3/regular");
    }
    return out;
}

/// Lemma-3 layer rendered as reports.
inline std::vector<Report> lemma3_reports(int n) {
    Lemma3Report rep = verify_lemma3(n);
    std::vector<Report> out;
    {
        Report r;
        r.claim = "all F(f) and the twists of F'(x^n) have d = (2n;n,n,n,n) at n=" +
                  std::to_string(n);
        r.paper_location = "lemma3/dimension";
        r.computed = rep.dims_ok ? "all equal"
                                 : "failures: " + std::to_string(rep.dim_failures.size()) +
                                       " first " + rep.dim_failures.front();
        r.printed = "all equal";
        r.verdict = rep.dims_ok ? "match" : "mismatch";
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim = "special form matches exactly one twist class of F'(x^n) at n=" +
                  std::to_string(n);
        r.paper_location = "lemma3/special-form";
        std::string hits;
        for (const auto& phi : rep.special_hits) hits += phi.word_string() + " ";
        r.computed = rep.special_hits.empty() ? "no match" : "hits: " + hits;
        r.printed = "one coset; labelled twist s2";
        r.verdict = (rep.special_unique && rep.special_twist &&
                     *rep.special_twist == Automorphism::s2())
                        ? "match"
                        : (rep.special_unique ? "unknown" : "mismatch");
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim = "the listed equivalence types are pairwise non-equivalent at n=" +
                  std::to_string(n);
        r.paper_location = "lemma3/types";
        r.computed = rep.pairwise_ok ? "pairwise distinct"
                                     : "collisions: " + rep.collisions.front();
        r.printed = "pairwise distinct";
        r.verdict = rep.pairwise_ok ? "match" : "mismatch";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace klein4
