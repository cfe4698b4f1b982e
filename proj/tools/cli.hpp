#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symprod::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 2;
inline constexpr int kFailOnNo = 3;
inline constexpr int kDecidedNo = 4;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symprod::cli
