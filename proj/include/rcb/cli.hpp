#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcb::cli {

/// Exit codes: 0 success / true, 1 semantic false (reducible, not a conic), 2 input error.
enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcb::cli
