#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncplane::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kParseFailure = 2,
  kNumericSetupFailure = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncplane::cli
