#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monobar {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCapacity = 3;

/// Runs one command. args excludes the program name. A problem file
/// argument of "-" (the default) reads from in.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace monobar
