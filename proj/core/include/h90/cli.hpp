#pragma once

#include <iosfwd>

namespace h90::cli {

// Entry point of the command-line tool.  Exit codes: 0 all checks passed,
// 1 a check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace h90::cli
