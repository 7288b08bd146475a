#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fusion::cli {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

// Entry point of the `fusion` tool; args excludes the program name.
// Subcommands: generate, solve, eval, convert, gomoryhu, bench.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusion::cli
