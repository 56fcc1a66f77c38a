#pragma once

#include <ostream>

namespace udh {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kAffirmative = 0,  // witness found, satisfied, verified
  kNegative = 1,     // none, violated, failed check
  kInputError = 2,   // usage or input error
  kUnresolved = 3,   // budget exhausted without an answer
};

/// Runs the command line `argv` writing reports to `out` and diagnostics to
/// `err`; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace udh
