#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jack::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kCacheError = 3,
  kInternal = 4,
};

/// Runs the tool on `args` (without the program name). Environment:
/// JACKPOLY_THREADS and JACKPOLY_CACHE_DIR supply defaults for --threads and
/// --cache-dir.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jack::cli
