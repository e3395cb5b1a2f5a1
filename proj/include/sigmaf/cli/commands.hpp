#ifndef SIGMAF_CLI_COMMANDS_HPP_
#define SIGMAF_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sigmaf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitComputation = 1,  // input parsed but the class or space is unusable
  kExitParse = 2,        // bad flags or malformed document
  kExitGuard = 3,        // refused: result would exceed a size guard
  kExitInternal = 4,     // a cross-check between two routes disagreed
};

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmaf::cli

#endif  // SIGMAF_CLI_COMMANDS_HPP_
