#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ftau::cli {

enum ExitCode : int { kOk = 0, kUserError = 1, kStepLimit = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ftau::cli
