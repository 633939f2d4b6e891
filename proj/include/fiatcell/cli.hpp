#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fiatcell::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Runs one command; `args` excludes the program name. Artifacts go to the
/// paths named by -o/--dot/--report, otherwise to `out`. Returns 0 when all
/// checks pass, 1 on a reported failure, 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b" or a single integer into an inclusive range; InputError
/// otherwise.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace fiatcell::cli
