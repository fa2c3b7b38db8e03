#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kValidation = 4,
  kResource = 5,
};

/// Runs the command line `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ecc::cli
