#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kout::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // bad flag or domain error
inline constexpr int kExitIo = 3;
inline constexpr int kExitParse = 4;

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Inclusive integer range "lo..hi[:step]" or a single value.
std::vector<unsigned> parse_int_range(const std::string& text);

/// Inclusive real range "lo..hi[:step]" (default step 0.05) or a single value.
std::vector<double> parse_real_range(const std::string& text);

} // namespace kout::cli
