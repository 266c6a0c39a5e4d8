#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lssa::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDataError = 2,
  kFailure = 3,  // convergence, calibration or validation failure
};

/// Runs the `lssa` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lssa::cli
