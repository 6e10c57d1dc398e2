#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumprod::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  // not-member, check failed, unsupported shape, discrepancies
  kUsage = 2,
  kInternal = 3,  // invariant violation inside the construction
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace sumprod::cli
