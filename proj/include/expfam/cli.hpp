#ifndef EXPFAM_CLI_HPP
#define EXPFAM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace expfam::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDomain = 2,
  kVerificationFailed = 3,
};

/// Runs the command line `expfam <args...>` (args exclude the program name).
/// Records go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expfam::cli

#endif  // EXPFAM_CLI_HPP
