#pragma once

#include <iosfwd>

namespace domgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one command. Results go to `out` (or --output),
/// the reproducibility header and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace domgame::cli
