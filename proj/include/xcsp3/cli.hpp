#ifndef XCSP3_CLI_HPP
#define XCSP3_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace xcsp3::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 2;      // parse or validation error
inline constexpr int kUsage = 3;
inline constexpr int kViolated = 10;    // violated constraint or cost mismatch
inline constexpr int kIncomplete = 11;
inline constexpr int kUnsat = 20;
inline constexpr int kLimit = 21;

// Runs the tool with `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xcsp3::cli

#endif
