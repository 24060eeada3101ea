#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace combigen::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyMismatch = 1,
    kUsage = 2,
    kLimits = 3,  // oracle cap or counter overflow
};

/// Runs the combigen command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::vector<std::string> split_tokens(const std::string& text);

} // namespace combigen::cli
