#pragma once

#include <iosfwd>

namespace cartbicat {

/// Exit codes: 0 success, 1 a check failed (or a suite missed an expectation), 2 usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cartbicat
