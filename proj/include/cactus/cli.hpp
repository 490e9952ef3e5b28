#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cactus {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name) writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cactus
