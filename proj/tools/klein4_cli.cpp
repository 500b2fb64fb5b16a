// Command-line surface for constructing, analyzing and classifying the
// indecomposable Klein-four subgroups of GL(m, K), K in {Z, Z_(2), Z_2}.

#include "klein4/klein4.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using klein4::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResourceCap = 3;

void write_output(const Json& j, const std::string& path) {
    std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
}

klein4::Representation load_rep(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
    try {
        return klein4::rep_from_json(j);
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed representation in '" + path + "': " + e.what());
    }
}

int report_exit(const std::vector<klein4::Report>& reports) {
    return klein4::all_match(reports) ? kExitOk : kExitMismatch;
}

void print_reports_human(const std::vector<klein4::Report>& reports) {
    for (const auto& r : reports)
        std::printf("[%-8s] %-58s computed %s | printed %s\n", r.verdict.c_str(),
                    r.claim.c_str(), r.computed.c_str(), r.printed.c_str());
    std::printf("%zu checks, %s\n", reports.size(),
                klein4::all_match(reports) ? "all match" : "MISMATCHES PRESENT");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of indecomposable Klein-four subgroups of GL(m,K)"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a representation and emit JSON");
    std::string rep_name, f_bits, conj_word, twist_name, out_path = "-";
    int n_param = 0, pos_param = 12;
    bool dual_flag = false;
    c_construct->add_option("--rep", rep_name,
                            "Delta_n|W_0|W_n|T_n|Delta_n1|F|Fprime|regular|chi1..chi4|"
                            "lemma3special")
        ->required();
    c_construct->add_option("--n", n_param, "family parameter n");
    c_construct->add_option("--f", f_bits, "polynomial, bitstring (lowest degree first) or x^k+... form");
    c_construct->add_option("--pos", pos_param, "companion-block position for F: 11, 12, 21 or 22");
    c_construct->add_option("--twist", twist_name, "tensor with a character, e.g. chi2");
    c_construct->add_option("--conj", conj_word, "conjugate by an automorphism word, e.g. s1.s2");
    c_construct->add_flag("--dual", dual_flag, "take the contragredient");
    c_construct->add_option("-o,--output", out_path, "output file, '-' for stdout");

    // dimvec
    auto* c_dimvec = app.add_subcommand("dimvec", "dimension vector of a representation file");
    std::string dimvec_file;
    bool dimvec_json = false;
    c_dimvec->add_option("file", dimvec_file)->required();
    c_dimvec->add_flag("--json", dimvec_json);

    // roots
    auto* c_roots = app.add_subcommand("roots", "enumerate positive roots of the form B");
    long roots_m = -1, roots_max_m = -1;
    bool roots_json = false;
    c_roots->add_option("--m", roots_m, "single weight m = d1+d2+d3+d4");
    c_roots->add_option("--max-m", roots_max_m, "all weights 0..M");
    c_roots->add_flag("--json", roots_json);

    // orbits
    auto* c_orbits = app.add_subcommand("orbits", "orbits of M_n under the automorphism action");
    int orbits_n = 0;
    bool orbits_json = false;
    c_orbits->add_option("--n", orbits_n)->required();
    c_orbits->add_flag("--json", orbits_json);

    // indecomposable
    auto* c_indec = app.add_subcommand("indecomposable", "indecomposability test");
    std::string indec_file;
    bool indec_json = false;
    c_indec->add_option("file", indec_file)->required();
    c_indec->add_flag("--json", indec_json);

    // equivalent
    auto* c_equiv = app.add_subcommand("equivalent", "equivalence of two representations");
    std::string equiv_file1, equiv_file2, equiv_ring = "local";
    long equiv_bound = 2;
    bool equiv_json = false;
    c_equiv->add_option("file1", equiv_file1)->required();
    c_equiv->add_option("file2", equiv_file2)->required();
    c_equiv->add_option("--ring", equiv_ring, "local (Z_(2)/Z_2, exact) or z (witness search)");
    c_equiv->add_option("--bound", equiv_bound, "coefficient bound for the witness search");
    c_equiv->add_flag("--json", equiv_json);

    // stabilizer
    auto* c_stab = app.add_subcommand("stabilizer", "stabilizer in Aut(G) up to equivalence");
    std::string stab_file;
    bool stab_json = false;
    c_stab->add_option("file", stab_file)->required();
    c_stab->add_flag("--json", stab_json);

    // classify
    auto* c_classify = app.add_subcommand("classify", "conjugacy classes of a given degree");
    long classify_m = 0;
    bool classify_expand = false, classify_json = false;
    c_classify->add_option("--m", classify_m)->required();
    c_classify->add_flag("--expand", classify_expand,
                         "also list the pairwise non-equivalent twists per class");
    c_classify->add_flag("--json", classify_json);

    // verify
    auto* c_verify = app.add_subcommand("verify", "check the built-in reference tables");
    int verify_table = 0, verify_max_n = 3, verify_n = 1;
    bool verify_lemma3 = false, verify_json = false;
    c_verify->add_option("--table", verify_table, "reference table: 1, 2 or 3");
    c_verify->add_option("--max-n", verify_max_n, "largest family parameter to scan");
    c_verify->add_flag("--lemma3", verify_lemma3, "run the degree-4n layer checks instead");
    c_verify->add_option("--n", verify_n, "family parameter for --lemma3");
    c_verify->add_flag("--json", verify_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_construct) {
            klein4::F2Poly f = f_bits.empty() ? klein4::F2Poly::zero()
                                              : klein4::F2Poly::parse(f_bits);
            klein4::Representation rep = klein4::construct(rep_name, n_param, f, pos_param);
            if (!conj_word.empty())
                rep = klein4::conjugate(rep, klein4::Automorphism::from_word(conj_word));
            if (!twist_name.empty())
                rep = klein4::tensor_character(rep, klein4::character_from_name(twist_name));
            if (dual_flag) rep = klein4::contragredient(rep);
            write_output(klein4::rep_to_json(rep), out_path);
            return kExitOk;
        }
        if (*c_dimvec) {
            klein4::Representation rep = load_rep(dimvec_file);
            auto [d, spaces] = klein4::dimension_vector(rep);
            if (dimvec_json) {
                write_output(klein4::dimvec_to_json(d), "-");
            } else {
                std::printf("d = %s, B = %ld\n", d.to_string().c_str(), klein4::form_B(d));
            }
            return kExitOk;
        }
        if (*c_roots) {
            if ((roots_m < 0) == (roots_max_m < 0))
                throw std::invalid_argument("give exactly one of --m and --max-m");
            long lo = roots_m >= 0 ? roots_m : 0;
            long hi = roots_m >= 0 ? roots_m : roots_max_m;
            Json arr = Json::array();
            for (long m = lo; m <= hi; ++m)
                for (const klein4::Root& r : klein4::enumerate_roots(m)) {
                    if (roots_json)
                        arr.push_back(klein4::dimvec_to_json(r.d));
                    else
                        std::printf("m=%2ld  %s\n", m, r.d.to_string().c_str());
                }
            if (roots_json) write_output(arr, "-");
            return kExitOk;
        }
        if (*c_orbits) {
            auto orbs = klein4::orbits(orbits_n);
            if (orbits_json) {
                Json arr = Json::array();
                for (const auto& orb : orbs) arr.push_back(klein4::orbit_to_json(orb));
                Json j;
                j["n"] = orbits_n;
                j["orbits"] = std::move(arr);
                write_output(j, "-");
            } else {
                std::printf("M_%d: %zu orbits\n", orbits_n, orbs.size());
                for (const auto& orb : orbs) {
                    std::printf("  rep %s (%s), size %zu, |St| = %zu, members:",
                                orb.representative.bitstring().c_str(),
                                orb.representative.human().c_str(), orb.members.size(),
                                orb.stabilizer.size());
                    for (const auto& f : orb.members)
                        std::printf(" %s", f.bitstring().c_str());
                    std::printf("\n");
                }
            }
            return kExitOk;
        }
        if (*c_indec) {
            klein4::Representation rep = load_rep(indec_file);
            bool ind = klein4::is_indecomposable(rep);
            if (indec_json) {
                Json j;
                j["indecomposable"] = ind;
                write_output(j, "-");
            } else {
                std::printf("%s\n", ind ? "indecomposable" : "decomposable");
            }
            return kExitOk;
        }
        if (*c_equiv) {
            klein4::Representation r1 = load_rep(equiv_file1);
            klein4::Representation r2 = load_rep(equiv_file2);
            if (r1.degree() != r2.degree())
                throw std::invalid_argument("degree mismatch: " + std::to_string(r1.degree()) +
                                            " vs " + std::to_string(r2.degree()));
            Json j;
            if (equiv_ring == "local") {
                bool eq = klein4::equivalent_local(r1, r2);
                j["ring"] = "local";
                j["verdict"] = eq ? "yes" : "no";
                if (!equiv_json) std::printf("%s (over Z_(2) and Z_2)\n", eq ? "yes" : "no");
            } else if (equiv_ring == "z") {
                klein4::GlobalEquivalence g = klein4::equivalent_global(r1, r2, equiv_bound);
                j["ring"] = "z";
                j["verdict"] = g.verdict == klein4::GlobalVerdict::yes
                                   ? "yes"
                                   : (g.verdict == klein4::GlobalVerdict::no ? "no" : "unknown");
                if (g.witness) j["witness"] = klein4::matrix_to_json(*g.witness);
                if (!equiv_json)
                    std::printf("%s (over Z, bound %ld)\n", j["verdict"].get<std::string>().c_str(),
                                equiv_bound);
            } else {
                throw std::invalid_argument("--ring must be 'local' or 'z'");
            }
            if (equiv_json) write_output(j, "-");
            return kExitOk;
        }
        if (*c_stab) {
            klein4::Representation rep = load_rep(stab_file);
            klein4::StabilizerResult st = klein4::stabilizer(rep);
            if (stab_json) {
                Json words = Json::array();
                for (const auto& phi : st.st) words.push_back(phi.word_string());
                Json j;
                j["St"] = std::move(words);
                j["S"] = st.index;
                write_output(j, "-");
            } else {
                std::printf("St = %s, S = %ld\n",
                            klein4::tables::subgroup_to_string(st.st).c_str(), st.index);
            }
            return kExitOk;
        }
        if (*c_classify) {
            auto entries = klein4::enumerate_degree(classify_m);
            if (classify_json) {
                Json arr = Json::array();
                for (const auto& e : entries)
                    arr.push_back(klein4::class_entry_to_json(e, classify_expand));
                Json j;
                j["m"] = classify_m;
                j["classes"] = std::move(arr);
                write_output(j, "-");
            } else {
                std::printf("degree %ld: %zu conjugacy classes\n", classify_m, entries.size());
                for (const auto& e : entries) {
                    std::printf("  %-22s d = %-16s St = %-28s S = %ld\n",
                                e.rep.display_name().c_str(),
                                e.dimvec ? e.dimvec->to_string().c_str() : "-",
                                klein4::tables::subgroup_to_string(e.st).c_str(), e.S);
                    if (classify_expand)
                        for (const auto& rep : klein4::expand_to_equivalence(e))
                            std::printf("      twist %s\n", rep.display_name().c_str());
                }
            }
            return kExitOk;
        }
        if (*c_verify) {
            std::vector<klein4::Report> reports;
            if (verify_lemma3) {
                reports = klein4::lemma3_reports(verify_n);
            } else if (verify_table == 1) {
                reports = klein4::verify_table1(verify_max_n);
            } else if (verify_table == 2) {
                reports = klein4::verify_table2(verify_max_n);
            } else if (verify_table == 3) {
                reports = klein4::verify_table3(verify_max_n);
            } else {
                throw std::invalid_argument("give --table 1|2|3 or --lemma3 N");
            }
            if (verify_json) {
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(klein4::report_to_json(r));
                write_output(arr, "-");
            } else {
                print_reports_human(reports);
            }
            return report_exit(reports);
        }
    } catch (const klein4::ResourceCapError& e) {
        std::fprintf(stderr, "error (resource cap): %s\n", e.what());
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
