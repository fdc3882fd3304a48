#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ratioopt::cli {

// Exit codes: 0 when every bound check passed, 1 when some bound check
// failed, 2 for invalid invocations (one-line diagnostic on `err`).
inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundFailed = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratioopt::cli
