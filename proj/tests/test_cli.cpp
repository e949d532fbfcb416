#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "etcs-cli-test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out_path = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    const fs::path err_path = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string(ETCS_CLI_PATH) + " " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    return res;
}

fs::path write_doc(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

// materialise a catalog entry as a document file through the CLI itself
fs::path shown(const std::string& id) {
    const RunResult res = run_cli("catalog show " + id);
    REQUIRE(res.code == 0);
    return write_doc(id + ".json", res.out);
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("help and argument errors") {
    CHECK(run_cli("--help").code == 0);
    CHECK(contains(run_cli("--help").out, "extra-twisted"));
    CHECK(run_cli("--frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("angles").code == 2);
    CHECK(run_cli("catalog").code == 2);
}

TEST_CASE("catalog list and show") {
    const RunResult list = run_cli("catalog list");
    CHECK(list.code == 0);
    for (const char* id :
         {"ex_3_6", "ex_3_7", "ex_3_8", "ex_3_10", "ex_3_11", "rect_b74", "rect_b86"})
        CHECK(contains(list.out, id));

    const RunResult show = run_cli("catalog show ex_3_7");
    CHECK(show.code == 0);
    CHECK(contains(show.out, "\"k_plus\": 2"));
    CHECK(contains(show.out, "\"gram\""));
    CHECK(contains(show.out, "\"manifold\""));

    const RunResult missing = run_cli("catalog show no_such_entry");
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "unknown catalog id"));
}

TEST_CASE("catalog verification") {
    const RunResult verify = run_cli("catalog verify");
    CHECK(verify.code == 0);
    CHECK(contains(verify.out, "7/7 pass"));

    const RunResult json = run_cli("--format json catalog verify");
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed.at("passed") == 7);
    CHECK(parsed.at("total") == 7);
    CHECK(parsed.at("reports").size() == 7);

    // the numeric fallback reproduces all entries too
    const RunResult numeric = run_cli("--no-exact catalog verify");
    CHECK(numeric.code == 0);
    CHECK(contains(numeric.out, "7/7 pass"));
}

TEST_CASE("angle spectra through the CLI") {
    const RunResult res = run_cli("angles " + shown("ex_3_7").string());
    CHECK(res.code == 0);
    CHECK(contains(res.out, "alpha+ = {pi/2, -pi/2, 0}"));
    CHECK(contains(res.out, "alpha- = {pi/2, -pi/2, 0 x17}"));

    const RunResult json = run_cli("--format json angles " + shown("ex_3_10").string());
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    REQUIRE(parsed.at("alpha_plus").size() == 3);
    REQUIRE(parsed.at("alpha_minus").size() == 19);
    bool found_third = false;
    for (const auto& a : parsed.at("alpha_plus"))
        if (a.contains("over_pi") && a.at("over_pi") == "1/3") found_third = true;
    CHECK(found_third);
}

TEST_CASE("nu values of every catalog entry") {
    const struct {
        const char* id;
        const char* nu_bar;
        const char* mod;
    } expected[] = {
        {"ex_3_6", "-39", "33"},   {"ex_3_7", "-36", "36"}, {"ex_3_8", "-36", "36"},
        {"ex_3_10", "-51", "21"},  {"ex_3_11", "-48", "24"},
        {"rect_b74", "0", "24"},   {"rect_b86", "0", "24"},
    };
    for (const auto& e : expected) {
        CAPTURE(e.id);
        const RunResult res = run_cli("nu " + shown(e.id).string());
        CHECK(res.code == 0);
        CHECK(contains(res.out, std::string("nu_bar = ") + e.nu_bar + "\n"));
        CHECK(contains(res.out, std::string("nu mod 48 = ") + e.mod + " (b1 = 0)"));
        CHECK(contains(res.out, "divisible by 3 = yes"));
        CHECK(contains(res.out, "within bound = yes"));
    }
}

TEST_CASE("nu detail output") {
    const fs::path doc = shown("ex_3_6");
    const RunResult res = run_cli("nu " + doc.string());
    CHECK(contains(res.out, "rho/pi = 1/2"));
    CHECK(contains(res.out, "m_rho = -1"));
    CHECK(contains(res.out, "gluing term (-72 rho/pi) = -36"));
    CHECK(contains(res.out, "correction term (3 m_rho) = -3"));

    // b1 shifts the 48-fold reduction
    const RunResult shifted = run_cli("nu --b1 1 " + doc.string());
    CHECK(shifted.code == 0);
    CHECK(contains(shifted.out, "nu mod 48 = 9 (b1 = 1)"));

    const RunResult json = run_cli("--format json nu " + doc.string());
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed.at("nu_bar") == "-39");
    CHECK(parsed.at("nu_mod_48") == 33);
    CHECK(parsed.at("m_rho") == -1);
    CHECK(parsed.at("rho_over_pi") == "1/2");
    CHECK(parsed.at("integral") == true);
}

TEST_CASE("classification through the CLI") {
    const RunResult structures =
        run_cli("classify " + shown("ex_3_7").string() + " " + shown("rect_b74").string());
    CHECK(structures.code == 0);
    CHECK(contains(structures.out, "verdict = diffeomorphic_distinct_structures"));
    CHECK(contains(structures.out, "  - [wilkens-classification]"));

    const RunResult moduli =
        run_cli("classify " + shown("ex_3_11").string() + " " + shown("rect_b86").string());
    CHECK(moduli.code == 0);
    CHECK(contains(moduli.out,
                   "verdict = diffeomorphic_same_structure_distinct_moduli_components"));

    const RunResult distinct =
        run_cli("classify " + shown("ex_3_6").string() + " " + shown("ex_3_10").string());
    CHECK(distinct.code == 0);
    CHECK(contains(distinct.out, "verdict = distinct_manifolds"));

    const RunResult json = run_cli("--format json classify " + shown("ex_3_7").string() + " " +
                                   shown("rect_b74").string());
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed.at("verdict") == "diffeomorphic_distinct_structures");
    CHECK(parsed.at("reasoning").size() > 0);

    // a document without a manifold block cannot be classified
    const fs::path bare = write_doc("bare.json",
                                    "{\"k_plus\": 1, \"k_minus\": 1, "
                                    "\"theta\": {\"num\": 1, \"den\": 2}, \"rank_plus\": 1, "
                                    "\"rank_minus\": 1, \"gram\": [[2, 0], [0, 2]]}");
    const RunResult no_manifold =
        run_cli("classify " + bare.string() + " " + shown("ex_3_6").string());
    CHECK(no_manifold.code == 2);
    CHECK(contains(no_manifold.err, "document lacks a manifold block"));
}

TEST_CASE("torus matching through the CLI") {
    const RunResult quarter = run_cli(
        "match-torus --k-plus 2 --zeta-plus 2 --xi-plus 2 "
        "--k-minus 1 --zeta-minus sqrt2 --xi-minus sqrt2");
    CHECK(quarter.code == 0);
    CHECK(contains(quarter.out, "theta = pi/4"));
    CHECK(contains(quarter.out, "theta = 3pi/4"));

    const RunResult sixth = run_cli(
        "match-torus --k-plus 2 --zeta-plus 2 --xi-plus 2*sqrt3 "
        "--k-minus 2 --zeta-minus 2*sqrt3 --xi-minus 2");
    CHECK(sixth.code == 0);
    CHECK(contains(sixth.out, "theta = pi/6"));

    const RunResult none = run_cli(
        "match-torus --zeta-plus 1 --xi-plus 1 --zeta-minus 1 --xi-minus 3");
    CHECK(none.code == 4);
    CHECK(contains(none.out, "no matching isometry"));

    const RunResult bad = run_cli(
        "match-torus --zeta-plus wat --xi-plus 1 --zeta-minus 1 --xi-minus 1");
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "cannot parse length"));

    const RunResult json = run_cli(
        "--format json match-torus --k-plus 2 --zeta-plus 2 --xi-plus 2 "
        "--k-minus 1 --zeta-minus sqrt2 --xi-minus sqrt2");
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed.at("angles").size() == 2);
    CHECK(parsed.at("angles")[0].at("over_pi") == "1/4");
}

TEST_CASE("error exit codes") {
    // unreadable path
    const RunResult unreadable = run_cli("angles /no/such/file.json");
    CHECK(unreadable.code == 2);
    CHECK(contains(unreadable.err, "cannot read file"));

    // malformed document
    const fs::path broken = write_doc("broken.json", "{\"k_plus\": ");
    CHECK(run_cli("angles " + broken.string()).code == 2);

    // mathematically impossible configuration: hyperbolic rotation plane
    const fs::path hyper = write_doc(
        "hyper.json",
        "{\"k_plus\": 1, \"k_minus\": 1, \"theta\": {\"num\": 1, \"den\": 2}, "
        "\"rank_plus\": 2, \"rank_minus\": 2, "
        "\"gram\": [[2, 0, 3, 0], [0, -2, 0, 0], [3, 0, 2, 0], [0, 0, 0, -2]]}");
    const RunResult math = run_cli("angles " + hyper.string());
    CHECK(math.code == 3);
    CHECK(contains(math.err, "error:"));

    // geometry incompatible with the declared gluing angle
    const fs::path lying = write_doc(
        "lying.json",
        "{\"k_plus\": 2, \"k_minus\": 2, \"theta\": {\"num\": 1, \"den\": 6}, "
        "\"rank_plus\": 1, \"rank_minus\": 1, \"gram\": [[2, 2], [2, 4]]}");
    const RunResult incompatible = run_cli("nu " + lying.string());
    CHECK(incompatible.code == 4);
    CHECK(contains(incompatible.err, "error:"));

    // angles itself does not check compatibility, only nu does
    CHECK(run_cli("angles " + lying.string()).code == 0);
}
