#pragma once

#include <iosfwd>

namespace macmp {

/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal assertion.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace macmp
