#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fwlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. Summaries go to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fwlab::cli
