#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qweyl::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, UsageError = 2 };

/// Runs the qweyl command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qweyl::cli
