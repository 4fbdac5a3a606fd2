#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isopath::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kLimitHit = 3,
  kVerifyMismatch = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isopath::cli
