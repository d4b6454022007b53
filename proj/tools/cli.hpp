#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbitcalc::cli {

// Exit codes: 0 success, 1 a negative mathematical answer, 2 bad input.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitcalc::cli
