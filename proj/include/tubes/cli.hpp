#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tubes {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
};

/// Runs the command line `args` (args[0] is the program name) writing
/// results to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tubes
