#include <doctest.h>

#include <sstream>

#include "h90/cli.hpp"
#include "h90/suite.hpp"

using namespace h90;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"h90"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("defect subcommand emits the documented JSON") {
    RunResult r = run_cli({"defect", "--p", "0", "--d", "6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"degree\":4,\"defect\":2}\n");
}

TEST_CASE("certificate subcommand: text block and exit codes") {
    RunResult all = run_cli({"certificate", "--case", "all", "--format", "text"});
    CHECK(all.exit_code == 0);
    // the version line sits between the start line and the case lines and is
    // excluded from comparisons
    std::string text = all.out;
    std::size_t version_start = text.find("h90 version:");
    REQUIRE(version_start != std::string::npos);
    std::size_t version_end = text.find('\n', version_start);
    text.erase(version_start, version_end - version_start + 1);
    CHECK(text ==
          "Starting computational certificates...\n"
          "Characteristic 11 degree-two quotient: passed\n"
          "Characteristic 19 Klein-four quotient: passed\n"
          "Characteristic 7 bad Morse reduction: passed\n"
          "All computational certificates passed.\n");

    RunResult unknown = run_cli({"certificate", "--case", "99-99"});
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli({"nonsense"}).exit_code == 2);
    CHECK(run_cli({"reduce"}).exit_code == 2);           // missing required flags
    CHECK(run_cli({"descent", "--d", "3", "--q", "6"}).exit_code == 2);  // not a prime power
    CHECK(run_cli({}).exit_code == 2);                   // no subcommand
    CHECK(run_cli({"defect", "--p", "0", "--d", "6", "--bogus"}).exit_code == 2);  // unknown flag
}

TEST_CASE("reduce and stratum subcommands") {
    RunResult r = run_cli({"reduce", "--p", "11", "--d", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"degree\":2") != std::string::npos);
    RunResult s = run_cli({"stratum", "--p", "2", "--m", "1", "--max", "127"});
    CHECK(s.exit_code == 0);
    CHECK(s.out == "[1,3,7,15,31,63,127]\n");
}

TEST_CASE("descent and mersenne subcommands cross-check the brute force") {
    CHECK(run_cli({"descent", "--d", "15", "--q", "8"}).exit_code == 0);
    CHECK(run_cli({"mersenne", "--a", "4", "--k", "3"}).exit_code == 0);
    RunResult inv = run_cli({"invert", "--a", "4", "--k", "3"});
    CHECK(inv.exit_code == 0);
    CHECK(inv.out.find("\"roundtrip\":true") != std::string::npos);
}

TEST_CASE("analysis subcommands run clean") {
    CHECK(run_cli({"cyclo", "--q", "11", "--e", "2"}).exit_code == 0);
    CHECK(run_cli({"branch", "--p", "7", "--d", "5"}).exit_code == 0);
    CHECK(run_cli({"crossratio", "--m", "12"}).exit_code == 0);
    CHECK(run_cli({"lacunary", "--p", "5", "--a", "1"}).exit_code == 0);
    CHECK(run_cli({"goodmod", "--d", "2"}).exit_code == 0);
    CHECK(run_cli({"twisted", "--p", "2", "--k", "3", "--d", "3"}).exit_code == 0);
    CHECK(run_cli({"collide", "--p", "5", "--k", "2", "--d", "2"}).exit_code == 0);
    CHECK(run_cli({"lift", "--q", "4", "--a", "1"}).exit_code == 0);
    CHECK(run_cli({"sparsity", "--k", "3", "--a", "2"}).exit_code == 0);
}

TEST_CASE("suite JSON is deterministic and guard-aware") {
    // a tiny guard forces enumeration-heavy checks to report skipped, and the
    // comparison payload is byte-identical across runs
    std::ostringstream out1, err1, out2, err2;
    std::vector<const char*> argv = {"h90", "suite", "--guard", "64"};
    int c1 = cli::run(static_cast<int>(argv.size()), argv.data(), out1, err1);
    int c2 = cli::run(static_cast<int>(argv.size()), argv.data(), out2, err2);
    CHECK(out1.str() == out2.str());
    CHECK(c1 == c2);
    CHECK(c1 == 0);  // skipped checks are not failures
    SuiteReport rep = run_suite(64, 1);
    CHECK(rep.skipped > 0);
    CHECK(rep.failed == 0);
    // summary counts equal the record tallies
    int pass = 0, fail = 0, skip = 0;
    for (const auto& c : rep.checks) {
        if (c.skipped)
            ++skip;
        else if (c.pass)
            ++pass;
        else
            ++fail;
    }
    CHECK(pass == rep.passed);
    CHECK(fail == rep.failed);
    CHECK(skip == rep.skipped);
    std::string payload = suite_json(rep);
    CHECK(payload.find("\"skipped\"") != std::string::npos);
    CHECK(suite_json(run_suite(64, 1)) == payload);
}
