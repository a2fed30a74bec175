#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitkit::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kFailed = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. The report goes
/// to `out`, errors (as JSON) and --pretty tables to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitkit::cli
