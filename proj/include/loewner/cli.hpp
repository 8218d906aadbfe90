#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loewner::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kNumericalFailure = 3,
  kAdmissibilityViolation = 4,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loewner::cli
