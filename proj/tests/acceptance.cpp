#include <doctest.h>

#include <cstdio>

#include "h90/suite.hpp"

using namespace h90;

// The full verification suite: every criterion must pass at its stated
// tolerance, one line per criterion.
TEST_CASE("acceptance suite") {
    SuiteReport rep = run_suite(kDefaultGuard, 4);
    for (const auto& c : rep.checks) {
        std::printf("criterion %2d: %s - %s (%s)%s%s\n", c.id,
                    c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL"), c.name.c_str(),
                    c.params.c_str(), c.witness.empty() ? "" : " -> ",
                    c.witness.c_str());
        std::fflush(stdout);
        INFO("criterion ", c.id, ": ", c.name, " ", c.witness);
        CHECK(c.pass);
        CHECK_FALSE(c.skipped);
    }
    CHECK(rep.failed == 0);
    CHECK(rep.skipped == 0);
    CHECK(rep.passed == static_cast<int>(rep.checks.size()));
}
