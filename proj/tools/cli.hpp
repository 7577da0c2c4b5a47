#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tint::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kFailure = 2;
inline constexpr int kBelowThreshold = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tint::cli
