#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdg::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kUndecided = 3 };

/// Runs the command line `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdg::cli
