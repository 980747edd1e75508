#pragma once

#include <iosfwd>

namespace qr::cli {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

// Full command-line dispatcher behind the `qr` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qr::cli
