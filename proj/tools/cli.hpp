#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aisemi::cli {

// Exit codes shared by every subcommand.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace aisemi::cli
