#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lexconn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancies = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexconn::cli
