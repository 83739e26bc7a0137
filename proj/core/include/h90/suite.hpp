#pragma once

#include <string>
#include <vector>

#include "h90/fields.hpp"

namespace h90 {

struct SuiteCheck {
    int id = 0;
    std::string name;
    std::string params;
    bool pass = false;
    bool skipped = false;
    std::string witness;
    double wall_ms = 0.0;
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    bool all_pass() const { return failed == 0; }
};

// Runs the full verification suite.  Checks that would exceed the guard are
// marked skipped, never failed.  jobs > 1 dispatches independent checks
// concurrently; the report order is fixed either way.
SuiteReport run_suite(std::uint64_t guard = kDefaultGuard, unsigned jobs = 1);

// Deterministic JSON payload: fixed ordering, no timings.
std::string suite_json(const SuiteReport& rep);
// Human-readable lines, one per check, timings included.
std::string suite_text(const SuiteReport& rep);

}  // namespace h90
