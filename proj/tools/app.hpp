#pragma once

#include <ostream>

namespace deltasets::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,       // bad flags or unreadable input
    kLimit = 2,       // a size guard refused the request
    kFinding = 3,     // a violated inequality that reproduced on recheck
};

/// Entry point for `deltasets analyze|verify|scan|fuzz-lemma|gen`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deltasets::cli
