#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gainlap::cli {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitBudget = 3;

// Runs one command line (args[0] is the program name). Reads graph files
// from disk and writes results to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gainlap::cli
