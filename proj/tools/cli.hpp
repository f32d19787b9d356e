#pragma once

#include <ostream>

namespace orthogen::cli {

/// Entry point of the command-line tool. Exit status: 0 success, 1
/// computational failure or failed criterion, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Regenerates experiment `id` (1..11) and prints its comparison tables
/// followed by PASS/FAIL lines. Returns 0 when every check passes.
int repro(int id, std::ostream& out);

}  // namespace orthogen::cli
