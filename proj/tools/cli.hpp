#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoRoot = 2;

// Parses argv (without the program name) and runs the chosen subcommand.
// Results go to `out` unless --out names a file; diagnostics go to `err`.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcs::cli
