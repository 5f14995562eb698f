#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3lat::cli {

enum ExitCode : int { kSuccess = 0, kMalformedInput = 1, kInvariantViolation = 2, kVerificationFailed = 3 };

/// Runs one command. JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3lat::cli
