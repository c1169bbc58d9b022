#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arch::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kUsage = 2,
  kVerifyFailed = 3,
  kResourceRefused = 4,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arch::cli
