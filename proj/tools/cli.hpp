#pragma once

#include <iosfwd>

namespace bracetree::cli {

/// Exit codes of the bracetree tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the tool on argv (argv[0] is the program name). Regular output goes
/// to `out` unless --output redirects it; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bracetree::cli
