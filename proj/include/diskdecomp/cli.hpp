#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diskdecomp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // negative verdict or inapplicable mode
inline constexpr int kExitInput = 2;     // malformed arguments, sequences or files

/// Runs one CLI invocation. `args` excludes the program name. JSON results
/// go to `out`; errors are written to `err` as {"error": message}.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace diskdecomp
