#ifndef XIML_CLI_HPP
#define XIML_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ximl {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitFormat = 3,
  kExitAccuracy = 4,
  kExitIo = 5,
};

/// Parses `args` (args[0] is the program name), runs one command and returns
/// its exit code. Diagnostics go to `err`; results go to `out` unless --out is set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ximl

#endif  // XIML_CLI_HPP
