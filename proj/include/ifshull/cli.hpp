#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ifshull::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerify = 2;

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifshull::cli
