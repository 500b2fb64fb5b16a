// Integration checks of the command-line surface: argv[1] is the path to
// the built binary.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

#define EXPECT(cond, what)                                             \
    do {                                                               \
        if (!(cond)) {                                                 \
            std::printf("FAIL %s:%d  %s\n", __FILE__, __LINE__, what); \
            ++failures;                                                \
        }                                                              \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::puts("usage: test_cli <path-to-binary>");
        return 2;
    }
    std::string bin = argv[1];
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "klein4_cli_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto file = [&](const char* name) { return (dir / name).string(); };

    // construct + dimvec round trip
    auto w0a = run(bin + " construct --rep W_0 -o " + file("w0.json"));
    EXPECT(w0a.exit_code == 0, "construct W_0");
    auto w0b = run(bin + " construct --rep W_0 -o " + file("w0b.json"));
    EXPECT(slurp(file("w0.json")) == slurp(file("w0b.json")),
           "construct output is byte-identical across runs");

    auto dv = run(bin + " dimvec " + file("w0.json") + " --json");
    EXPECT(dv.exit_code == 0, "dimvec exit code");
    auto dvj = nlohmann::json::parse(dv.out);
    EXPECT(dvj["d"] == nlohmann::json({1, 1, 1, 1, 1}), "W_0 dimension vector");
    EXPECT(dvj["B"] == 1, "B value of the W_0 dimension vector");

    // representation files read back identically
    auto reread = run(bin + " dimvec " + file("w0.json") + " --json");
    EXPECT(reread.out == dv.out, "dimvec output deterministic");

    // constructing with twists
    EXPECT(run(bin + " construct --rep Delta_n --n 1 -o " + file("d1.json")).exit_code == 0,
           "construct Delta_1");
    EXPECT(run(bin + " construct --rep Delta_n --n 1 --conj s1 -o " + file("d1s1.json"))
                   .exit_code == 0,
           "construct Delta_1 conjugate");
    EXPECT(run(bin + " construct --rep F --f 111 --twist chi2 --dual -o " + file("f.json"))
                   .exit_code == 0,
           "construct twisted dual F");

    // equivalence
    auto eq = run(bin + " equivalent " + file("d1.json") + " " + file("d1s1.json") +
                  " --ring local --json");
    EXPECT(eq.exit_code == 0, "equivalent exit code");
    EXPECT(nlohmann::json::parse(eq.out)["verdict"] == "yes", "Delta_1 ~ its conjugate");

    auto eqz = run(bin + " equivalent " + file("d1.json") + " " + file("d1s1.json") +
                   " --ring z --bound 2 --json");
    EXPECT(eqz.exit_code == 0, "equivalent over Z exit code");
    auto eqzj = nlohmann::json::parse(eqz.out);
    EXPECT(eqzj["verdict"] == "yes", "unimodular witness found");
    EXPECT(eqzj.contains("witness"), "witness present");

    // degree mismatch is a usage error with a distinct message
    auto mism = run(bin + " equivalent " + file("d1.json") + " " + file("w0.json"));
    EXPECT(mism.exit_code == 1, "degree mismatch exit code");

    // malformed JSON
    {
        std::ofstream bad(file("bad.json"));
        bad << "{ not json";
    }
    EXPECT(run(bin + " dimvec " + file("bad.json")).exit_code == 1, "malformed JSON exit code");

    // stabilizer
    auto st = run(bin + " stabilizer " + file("d1.json") + " --json");
    EXPECT(st.exit_code == 0, "stabilizer exit code");
    EXPECT(nlohmann::json::parse(st.out)["S"] == 1, "Delta_1 stabilizer index");

    // indecomposable
    auto ind = run(bin + " indecomposable " + file("w0.json") + " --json");
    EXPECT(nlohmann::json::parse(ind.out)["indecomposable"] == true, "W_0 indecomposable");

    // orbits
    auto orb = run(bin + " orbits --n 3 --json");
    EXPECT(orb.exit_code == 0, "orbits exit code");
    auto orbj = nlohmann::json::parse(orb.out);
    EXPECT(orbj["orbits"].size() == 1, "M_3 has one orbit");
    EXPECT(orbj["orbits"][0]["stabilizer_order"] == 3, "M_3 orbit stabilizer order");

    // roots
    auto roots = run(bin + " roots --m 4 --json");
    EXPECT(nlohmann::json::parse(roots.out).size() == 2, "two roots of weight 4");

    // classify
    auto cl2 = run(bin + " classify --m 2 --json");
    EXPECT(cl2.exit_code == 0, "classify --m 2 exit code");
    EXPECT(nlohmann::json::parse(cl2.out)["classes"].empty(), "no degree-2 classes");
    auto cl4 = run(bin + " classify --m 4 --expand --json");
    EXPECT(nlohmann::json::parse(cl4.out)["classes"].size() == 5, "five degree-4 classes");

    // verify: table 1 clean, table 2 carries the known misprints
    EXPECT(run(bin + " verify --table 1 --max-n 3").exit_code == 0, "table 1 verifies");
    EXPECT(run(bin + " verify --table 2 --max-n 1").exit_code == 2,
           "table 2 reports mismatches");
    // 6 rows live at n >= 1 only, 6 rows start at n = 0: 18 instances
    auto t2 = run(bin + " verify --table 2 --max-n 1 --json");
    auto t2j = nlohmann::json::parse(t2.out);
    EXPECT(t2j.is_array() && t2j.size() == 18, "one report per table-2 row instance");
    EXPECT(run(bin + " verify --lemma3 --n 1").exit_code == 0, "lemma3 layer verifies");

    // usage errors
    EXPECT(run(bin + " frobnicate").exit_code == 1, "unknown subcommand");
    EXPECT(run(bin + " roots").exit_code == 1, "roots needs --m or --max-m");

    std::filesystem::remove_all(dir);
    if (failures == 0) std::puts("cli: all checks passed");
    return failures == 0 ? 0 : 1;
}
