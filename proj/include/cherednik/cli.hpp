#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cherednik::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kBadInput = 2;

/// Default degree cap: CHEREDNIK2_MAX_DEGREE if set and valid, else 25.
int default_max_degree();

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherednik::cli
