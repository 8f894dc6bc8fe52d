#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcx {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitBudget = 3,
  kExitMismatch = 4,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcx
