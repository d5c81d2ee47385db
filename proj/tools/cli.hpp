#pragma once

#include <ostream>

namespace trigbound::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitCounterexample = 3;

/// Runs the command line against the given streams; returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigbound::cli
