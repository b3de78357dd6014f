#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fibpair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitContradiction = 2;

/// Runs one command line (without the program name). Writes results to `out`
/// and diagnostics to `err`; returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fibpair::cli
