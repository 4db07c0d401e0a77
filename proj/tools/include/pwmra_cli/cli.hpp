#pragma once

#include <ostream>

namespace pwmra::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, construction_failed = 3 };

/// Entry point of the `pwmra` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pwmra::cli
