#pragma once

#include <iosfwd>

namespace cfc::cli {

// Exit codes of the `cfc` tool.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,     // unreadable, unparsable or disconnected graph
  kBadColoring = 2,    // coloring JSON does not fit the graph
  kMethodRefused = 3,  // --method formula with no closed form
  kScaleLimit = 4,     // a desk-scale limit was hit
  kInternal = 5,
};

// Runs the command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cfc::cli
