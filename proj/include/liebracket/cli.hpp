#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace liebracket {

enum ExitCode : int { kExitPass = 0, kExitMathFailure = 1, kExitUsage = 2 };

/// Runs one CLI command. `args` excludes the program name. Writes a single
/// JSON report to `out` and a human-readable summary to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace liebracket
