#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylps::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInconclusive = 2, kUsage = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylps::cli
