#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svineq::cli {

// Exit codes of every subcommand.
enum ExitCode : int {
  kHolds = 0,
  kViolated = 1,
  kHypothesisViolated = 2,
  kUsageError = 3,
  kExhausted = 4,
};

// args excludes the program name. Writes reports to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Accepts "2..6", "2,3,5,8" and mixtures such as "2..4,8". Throws ConfigInvalid.
std::vector<std::size_t> parse_dims(const std::string& spec);

}  // namespace svineq::cli
