#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dbseq::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResourceGuard = 3,
};

/// Largest k^n (or stream limit) accepted without --allow-large. Read from
/// DBSEQ_MAX_WORDS when set, else 2^22.
std::uint64_t default_word_bound();

/// Runs the command line `args` (without the program name), writing the
/// result to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dbseq::cli
