#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace acs::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kCapExceeded = 3,
};

/// Runs one `acs` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exact rendering of num/den to six decimals, rounding half up.
std::string fixed6(std::uint64_t num, std::uint64_t den);

}  // namespace acs::cli
