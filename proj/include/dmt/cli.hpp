#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmt::cli {

enum ExitCode : int {
  kAffirmative = 0,  // sat / valid / entailed / holds
  kNegative = 1,
  kUsageError = 2,
  kExhausted = 3,    // resource limits or unknown entailment
};

// Runs the `dmt` command line; args[0] is the program name. The verdict line
// goes to `out` first, followed by any trace; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmt::cli
