#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace streamlab::cli {

enum ExitCode : int {
  kOk = 0,        // success or affirmative verdict
  kNegative = 1,  // check/synth "no", congruent absent
  kUsage = 2,     // usage, parse, or format error
  kAborted = 3,   // stall or index ceiling exceeded
};

/// Runs one command line (without the program name). STREAMLAB_MAX_PREFIX,
/// when set, overrides the index ceiling for the duration of the call.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace streamlab::cli
