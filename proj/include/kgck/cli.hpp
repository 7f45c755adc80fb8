#pragma once

#include <iosfwd>

namespace kgck {

/// Exit codes of the command line.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitPrecondition = 2,
  kExitBudget = 3,
};

/// Parses argv, runs one subcommand and writes its report to `out`
/// (diagnostics to `err`). Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kgck
