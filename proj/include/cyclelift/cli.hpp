#pragma once

#include <iosfwd>

namespace cyclelift::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kHypothesis = 2,
    kPrecision = 3,
    kTruncation = 4,
};

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclelift::cli
