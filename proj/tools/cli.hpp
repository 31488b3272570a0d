#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permrel::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kAssertion = 1, kUsage = 2, kBudget = 3 };

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permrel::cli
