#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oqecc::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitZeroCode = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitParseError = 4;
inline constexpr int kExitTheoryViolation = 5;

// Runs `oqecc <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oqecc::cli
