#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lacunary {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitPreconditions = 2;
inline constexpr int kExitUnsound = 3;

/// Runs one command (`args` excludes the program name).  Results go to `out`
/// or the --out file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lacunary
