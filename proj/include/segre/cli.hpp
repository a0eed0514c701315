#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace segre::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kMalformedInput = 2,
  kZeroVector = 3,
  kResourceGuard = 4,
};

// Runs the command line given without the program name, e.g.
// {"classify", "--q", "2", "--coords", "1,0,0,0,0,0,0,0"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segre::cli
