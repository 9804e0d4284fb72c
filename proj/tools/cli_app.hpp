#pragma once

#include <iosfwd>

namespace tdeig::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kInfeasible = 3,
  kMismatch = 4,
};

/// Runs one command line; JSON or CSV goes to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tdeig::cli
