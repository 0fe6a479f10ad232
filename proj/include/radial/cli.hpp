#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radial {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes: 0 success, 1 runtime failure, 2 usage or validation error.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Entry point behind the `radial` executable. `args` excludes the program
/// name. Diagnostics go to `err`, progress to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radial
