#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resonance::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; args exclude the program name. Results go to out
/// (or the -o file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace resonance::cli
