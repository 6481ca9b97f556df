#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfix::cli {

enum ExitCode : int { yes = 0, no = 1, usage_error = 2, cap_exceeded = 3, oracle_mismatch = 4 };

/// Runs the command line `args` (args[0] is the program name). Input "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tfix::cli
