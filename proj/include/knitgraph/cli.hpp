#pragma once

#include <iosfwd>

namespace knitgraph {

/// Runs the command line. Returns 0 for an affirmative answer, 1 for a
/// negative one and 2 for invalid input or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace knitgraph
