#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pmm {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotEqual = 1,  ///< also a failing self-test suite
  kExitUsage = 2,
  kExitPrecondition = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmm
