#pragma once

#include <ostream>

namespace spincorr::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Entry point of the spincorr tool, with injectable streams for testing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spincorr::cli
