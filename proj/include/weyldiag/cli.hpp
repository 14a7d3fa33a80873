#pragma once

#include <string>
#include <vector>

namespace weyldiag::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kPreconditionError = 3,
  kSizeCapError = 4,
};

struct Result {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command line; args[0] is the program name. Never throws.
Result run(const std::vector<std::string>& args);

}  // namespace weyldiag::cli
