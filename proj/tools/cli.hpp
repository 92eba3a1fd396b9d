#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sasaki::cli {

// Exit codes.
inline constexpr int kOk = 0;        // success / accepted
inline constexpr int kRejected = 1;  // domain rejection
inline constexpr int kUsage = 2;     // usage, parse or IO error

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sasaki::cli
