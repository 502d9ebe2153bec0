#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagnet::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBadGraph = 2, kBudget = 3 };

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagnet::cli
