#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gnyamabe::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kNumericalFailure = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (without the program name), writing reports
/// to `out` (or --out) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gnyamabe::cli
