#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure or
// runtime error, 2 usage or input error.

#include <iosfwd>

namespace torsionkit {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torsionkit
