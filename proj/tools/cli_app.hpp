#pragma once

#include <iosfwd>

namespace gcdrec::cli {

// Full command-line front end. Writes results to `out`, diagnostics to
// `err`, and returns the process exit code:
//   0 success, 2 precondition/config error, 3 overflow or effort cap,
//   4 theorem violation detected by the bounds analysis.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcdrec::cli
