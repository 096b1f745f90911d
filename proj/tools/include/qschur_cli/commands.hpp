#pragma once

#include <iosfwd>

namespace qschur::cli {

enum ExitCode { kOk = 0, kInvalidInput = 2, kComputationFailed = 3 };

// Entry point of the qschur tool; writes results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qschur::cli
