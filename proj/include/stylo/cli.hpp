#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stylo::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kLex = 3,
  kDegenerate = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; a nonzero return always comes with a message on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stylo::cli
