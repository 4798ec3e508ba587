#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

const std::string& temp_dir() {
    static const std::string dir = [] {
        char pattern[] = "/tmp/ivfg_cli_XXXXXX";
        const char* made = mkdtemp(pattern);
        REQUIRE(made != nullptr);
        return std::string(made);
    }();
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const std::string base = temp_dir() + "/run" + std::to_string(counter++);
    const std::string command =
        std::string(IVFG_CLI_PATH) + " " + args + " >" + base + ".out 2>" + base + ".err";
    const int raw = std::system(command.c_str());
    REQUIRE(raw != -1);
    RunResult result;
    result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(base + ".out");
    result.err = slurp(base + ".err");
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(IVFG_FIXTURE_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").code == 2);
    CHECK(run("bogus-subcommand").code == 2);
    CHECK(run("validate").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("validate distinguishes ok, malformed, invalid, and unreadable") {
    const RunResult ok = run("validate " + fixture("example26.ivfg"));
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    const RunResult malformed = run("validate " + fixture("malformed.ivfg"));
    CHECK(malformed.code == 2);
    CHECK(contains(malformed.err, "line 3, column 1: unknown directive 'vertx'"));

    const RunResult invalid = run("validate " + fixture("invalid.ivfg"));
    CHECK(invalid.code == 3);
    CHECK(contains(invalid.err, "exceeds min of endpoint lower bounds"));

    const RunResult missing = run("validate " + temp_dir() + "/never_written.ivfg");
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot read file"));
}

TEST_CASE("validate --json reports the graph shape") {
    const RunResult r = run("--json validate " + fixture("example26.ivfg"));
    REQUIRE(r.code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["valid"] == true);
    CHECK(parsed["name"] == "example26");
    CHECK(parsed["vertices"] == 3);
    CHECK(parsed["edges"] == 3);
}

TEST_CASE("stats prints exact order and size") {
    const RunResult r = run("stats " + fixture("example26.ivfg"));
    CHECK(r.code == 0);
    CHECK(r.out == "order=3 size=2.35\n");
}

TEST_CASE("degrees prints open and closed pairs per vertex") {
    const RunResult r = run("degrees " + fixture("example26.ivfg"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "u1 open=(0.7, 1.3) closed=(1, 2)\n"));
    CHECK(contains(r.out, "u2 open=(0.7, 1.2) closed=(1, 2)\n"));
    CHECK(contains(r.out, "u3 open=(0.6, 1.5) closed=(1, 2)\n"));
}

TEST_CASE("distances prints every ordered pair") {
    const RunResult r = run("distances " + fixture("example26.ivfg"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "u1 u1 lower=0 upper=0\n"));
    CHECK(contains(r.out, "u1 u2 lower=5 upper=10/3\n"));
    CHECK(contains(r.out, "u2 u1 lower=5 upper=10/3\n"));
    CHECK(contains(r.out, "u2 u3 lower=10/3 upper=2.5\n"));
    CHECK(contains(r.out, "u1 u3 lower=5 upper=10/3\n"));
}

TEST_CASE("classify prints all six verdicts") {
    const RunResult r = run("classify " + fixture("example26.ivfg"));
    CHECK(r.code == 0);
    CHECK(r.out == "irregular=true\n"
                   "totally_irregular=false\n"
                   "neighbourly_irregular=true\n"
                   "neighbourly_totally_irregular=false\n"
                   "highly_irregular=true\n"
                   "highly_totally_irregular=false\n");

    const RunResult j = run("--json classify " + fixture("example26.ivfg"));
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["irregular"] == true);
    CHECK(parsed["totally_irregular"] == false);
    CHECK(parsed.size() == 6);
}

TEST_CASE("complement prints a document or explains why none exists") {
    const RunResult none = run("complement " + fixture("example26.ivfg"));
    CHECK(none.code == 3);
    CHECK(contains(none.err, "pair 'u2'-'u3': zero lower bound with positive upper bound 0.1"));

    const RunResult empty = run("complement " + fixture("edge_half.ivfg"));
    CHECK(empty.code == 0);
    CHECK(empty.out == "graph edge_half_complement\n"
                       "vertex a 0.5 0.5\n"
                       "vertex b 0.5 0.5\n");

    const RunResult quarter = run("complement " + fixture("edge_quarter.ivfg"));
    CHECK(quarter.code == 0);
    CHECK(contains(quarter.out, "edge a b 0.25 0.25\n"));
}

TEST_CASE("isomorphic honours the mode flag") {
    const std::string pair = fixture("edge_half.ivfg") + " " + fixture("edge_half_raised.ivfg");

    const RunResult iso = run("isomorphic " + pair);
    CHECK(iso.code == 0);
    CHECK(iso.out == "false\n");

    const RunResult coweak = run("isomorphic " + pair + " --mode coweak");
    CHECK(coweak.code == 0);
    CHECK(contains(coweak.out, "true\n"));
    CHECK(contains(coweak.out, " -> "));

    const RunResult json = run("--json isomorphic " + pair + " --mode coweak");
    REQUIRE(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["mode"] == "coweak");
    CHECK(parsed["found"] == true);
    CHECK(parsed["mapping"].size() == 2);

    CHECK(run("isomorphic " + pair + " --mode sideways").code == 2);
}

TEST_CASE("isometric supports mutual and one-sided checks") {
    const std::string same = fixture("edge_half.ivfg") + " " + fixture("edge_half_raised.ivfg");
    const std::string diff = fixture("edge_half.ivfg") + " " + fixture("edge_quarter.ivfg");

    CHECK(run("isometric " + same).out == "true\n");
    CHECK(run("isometric " + same).code == 0);
    CHECK(run("isometric " + diff).out == "false\n");
    CHECK(run("isometric " + diff).code == 0);
    CHECK(run("isometric " + same + " --direction from").out == "true\n");
    CHECK(run("isometric " + same + " --direction sideways").code == 2);

    const RunResult json = run("--json isometric " + same + " --direction from");
    REQUIRE(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["holds"] == true);
    CHECK(parsed["witnesses"].size() == 2);
}

TEST_CASE("laws prints one line per law and a final verdict") {
    const RunResult r = run("laws --seed 7 --trials 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "reflexivity checked=5 violations=0\n"));
    CHECK(contains(r.out, "symmetry checked=5 violations=0\n"));
    CHECK(contains(r.out, "transitivity checked=5 violations=0\n"));
    CHECK(contains(r.out, "isomorphism_implies_isometry checked=5 violations=0\n"));
    CHECK(contains(r.out, "coweak_implies_isometry checked=5 violations=0\n"));
    CHECK(contains(r.out, "all laws pass\n"));
}

TEST_CASE("gen is deterministic and emits a valid document") {
    const RunResult a = run("gen --vertices 4 --seed 9");
    const RunResult b = run("gen --vertices 4 --seed 9");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "graph rnd_n4_s9\n"));

    const std::string path = temp_dir() + "/generated.ivfg";
    std::ofstream(path) << a.out;
    const RunResult check = run("validate " + path);
    CHECK(check.code == 0);
    CHECK(check.out == "valid\n");

    CHECK(run("gen --vertices 4 --density 2 --seed 9").code == 2);
}
