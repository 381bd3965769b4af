#pragma once

#include <iosfwd>

namespace hasym::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kAccuracyGating = 3,
};

/// Entry point of the `hasym` tool. Normal output goes to `out`, diagnostics
/// to `err`; files are written only when --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hasym::cli
