#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace luroth::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kInputError = 2, kPreconditionFailure = 3 };

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace luroth::cli
