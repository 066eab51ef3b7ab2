#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holoknot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or mathematical failure
inline constexpr int kExitUsage = 2;    // usage or parse error

// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holoknot::cli
