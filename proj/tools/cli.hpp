#pragma once

#include <ostream>

namespace djk::cli {

/// Runs one subcommand. Exit status: 0 success, 1 domain failure (no
/// coloring, non-unimodular pair), 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace djk::cli
