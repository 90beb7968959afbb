#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l1kit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInputError = 2;
inline constexpr int kNoNetwork = 3;
inline constexpr int kInternalError = 4;

// `args` excludes the program name. Reads INPUT from `in` when no path is
// given or the path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace l1kit::cli
