#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace coupon::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kComputationError = 3 };

/// Runs the command line `coupon <args...>` (args excludes the program name),
/// writing results to `out` (or --out) and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace coupon::cli
