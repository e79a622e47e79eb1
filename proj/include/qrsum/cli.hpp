#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrsum::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kBudgetExceeded = 3;
inline constexpr int kNonInteger = 4;
inline constexpr int kMismatch = 5;

// Subcommands: count, table, verify, charsums {gauss|jacobi}.
// Records go to `out` (aligned text, or JSON lines with --json); diagnostics
// go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrsum::cli
