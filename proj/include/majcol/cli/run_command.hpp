#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majcol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses args (without the program name) and runs one subcommand.
/// Results go to --out files or to `out`; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majcol::cli
