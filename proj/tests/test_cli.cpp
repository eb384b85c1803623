#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "hcenter/json_io.hpp"
#include "hcenter/shifted.hpp"

using namespace hcenter;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so error
// paths stay quiet in the test log.
RunResult run_cli(const std::string& args, const std::string& pipe_in = "") {
    std::string cmd;
    if (!pipe_in.empty()) cmd += "printf '%s' '" + pipe_in + "' | ";
    cmd += std::string(HCENTER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("shifted multiply prints the canonical product") {
    RunResult r = run_cli("shifted multiply \"p#[2]\" \"p#[2]\"");
    CHECK(r.code == 0);
    CHECK(r.out == "p#[2,2] + 4 p#[3] + 2 p#[1,1]\n");
}

TEST_CASE("json output is canonical and feeds back into the parser") {
    RunResult r = run_cli("--format json shifted multiply \"p#[2]\" \"p#[2]\"");
    CHECK(r.code == 0);
    const std::string expect =
        "{\"basis\":\"pshift\",\"terms\":[{\"coef\":\"2\",\"part\":[1,1]},"
        "{\"coef\":\"4\",\"part\":[3]},{\"coef\":\"1\",\"part\":[2,2]}]}\n";
    CHECK(r.out == expect);
    ShiftedSymFn f = shifted_from_json(r.out);
    CHECK(shifted_to_json(f) + "\n" == r.out);
}

TEST_CASE("shifted eval, convert and omega") {
    CHECK(run_cli("shifted eval \"p#[1]\" --lambda 4,2,1").out == "7\n");
    CHECK(run_cli("shifted eval \"s*[2,1]\" --lambda 2,1").out == "3\n");
    CHECK(run_cli("shifted convert \"p#[1,1]\" --to sstar").out ==
          "s*[2] + s*[1,1]\n");
    CHECK(run_cli("shifted convert \"s*[2] + s*[1,1]\"").out == "p#[1,1]\n");
    CHECK(run_cli("shifted omega \"p#[2]\"").out == "-p#[2]\n");
    CHECK(run_cli("shifted omega \"p#[3]\"").out == "p#[3]\n");
}

TEST_CASE("partition info lists the classical data") {
    RunResult r = run_cli("partition info 4,2,1");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "partition: (4,2,1)\n"
          "size: 7\n"
          "length: 3\n"
          "conjugate: (3,2,1,1)\n"
          "hook product: 144\n"
          "dimension: 35\n"
          "addable contents: -3,-1,1,4\n"
          "removable contents: -2,0,3\n");
}

TEST_CASE("character table and single values") {
    RunResult r = run_cli("char table --n 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "mu: (3) (2,1) (1,1,1)\n"
          "(3): 1 1 1\n"
          "(2,1): -1 0 2\n"
          "(1,1,1): 1 -1 1\n");
    CHECK(run_cli("char value --lambda 3,1 --mu 2,1,1").out == "1\n");
    CHECK(run_cli("char value --lambda 2,2 --mu 1,1,1,1").out == "2\n");
}

TEST_CASE("measure output with moments and cumulants") {
    RunResult r = run_cli("measure --lambda 1 --k 4");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "atoms: -1:1/2 1:1/2\n"
          "moments: 1 0 1 0 1\n"
          "booleans: 0 1 0 0\n");
    CHECK(run_cli("--format json measure --lambda 1").out ==
          "{\"atoms\":[{\"w\":\"1/2\",\"x\":-1},{\"w\":\"1/2\",\"x\":1}]}\n");
    CHECK(run_cli("measure --lambda 2,1 --cotransition").out ==
          "atoms: -1:1/2 1:1/2\n");
}

TEST_CASE("diagram subcommands read JSON files or stdin") {
    const std::string ctilde2 =
        "{\"bottom\":[],\"slices\":[{\"kind\":\"cup_ccw\",\"pos\":0},"
        "{\"kind\":\"dot\",\"pos\":1},{\"kind\":\"dot\",\"pos\":1},"
        "{\"kind\":\"cap_ccw\",\"pos\":0}],\"top\":[]}";
    RunResult r = run_cli("diagram phi -f -", ctilde2);
    CHECK(r.code == 0);
    CHECK(r.out == "p#[1]\n");

    const std::string circle =
        "{\"bottom\":[],\"slices\":[{\"kind\":\"cup_cw\",\"pos\":0},"
        "{\"kind\":\"cap_cw\",\"pos\":0}],\"top\":[]}";
    CHECK(run_cli("diagram eval -f - --n 3", circle).out == "(1,1,1): 3\n");

    const std::string dotted =
        "{\"bottom\":[],\"slices\":[{\"kind\":\"cup_ccw\",\"pos\":0},"
        "{\"kind\":\"dot\",\"pos\":1},{\"kind\":\"cap_ccw\",\"pos\":0}],\"top\":[]}";
    CHECK(run_cli("diagram eval -f - --n 3", dotted).out == "0\n");

    CHECK(run_cli("--format json diagram eval -f - --n 2", circle).out ==
          "{\"class_coeffs\":[{\"coef\":\"2\",\"part\":[1,1]}],\"n\":2}\n");
}

TEST_CASE("verification suites run from the command line") {
    RunResult r = run_cli("verify --suite characterization --max-n 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("suite characterization: ") != std::string::npos);

    RunResult j = run_cli("--format json verify --suite involutions --max-n 2");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"suite\":\"involutions\"") != std::string::npos);
    CHECK(j.out.find("\"passed\":false") == std::string::npos);
}

TEST_CASE("usage errors exit 2, computation failures exit 1") {
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("char table").code == 2);              // missing --n
    CHECK(run_cli("char table --n 25").code == 2);       // out of range
    CHECK(run_cli("partition info 2,3").code == 2);      // not a partition
    CHECK(run_cli("shifted eval \"p#[\" --lambda 1").code == 2);
    CHECK(run_cli("measure --lambda 1,2").code == 2);
    CHECK(run_cli("verify --suite no-such-suite").code == 2);

    // Well-formed input whose computation is undefined.
    CHECK(run_cli("measure --lambda '' --cotransition").code == 1);
    CHECK(run_cli("char value --lambda 2 --mu 3").code == 1);
    CHECK(run_cli("diagram eval -f /no/such/file.json --n 2").code == 1);

    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("shifted --help").code == 0);
}
