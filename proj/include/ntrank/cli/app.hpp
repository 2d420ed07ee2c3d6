#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ntrank::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInputError = 2, kExitEmptyInput = 3 };

/// Runs the command line `args` (without the program name). Returns the process exit code:
/// 0 success, 2 parse/domain errors (including duplicate ids and mixed kinds), 3 empty input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ntrank::cli
