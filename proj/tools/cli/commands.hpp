#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace junction::cli {

/// Process exit codes; part of the command-line contract.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace junction::cli
