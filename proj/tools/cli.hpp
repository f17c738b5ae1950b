#pragma once

#include <iosfwd>

namespace kevac::cli {

/// Runs one command line (argv[0] is the program name). Exit status: 0 success,
/// 1 invalid input or failed verification, 2 usage error, 3 size guard exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kevac::cli
