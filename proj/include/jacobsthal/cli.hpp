#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobsthal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitUsage = 64;

/// Runs one command line (args[0] is the program name). The report goes to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 when every
/// check verified or decided, 2 on any refutation, 3 on any undecided
/// result, 64 on usage errors. Refutation takes precedence over undecided.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacobsthal::cli
