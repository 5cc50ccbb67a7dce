#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace einf::cli {

// Runs one command line (program name excluded). Exit codes: 0 success,
// 1 bad input or failed verification, 2 broken internal invariant.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Default for --format when the flag is absent.
inline constexpr const char* kFormatEnv = "EINF_FORMAT";

}  // namespace einf::cli
