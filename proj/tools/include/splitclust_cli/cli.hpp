#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitclust::cli {

enum ExitCode : int {
    kSuccess = 0,    // success or "yes"
    kNo = 1,         // "no", or invalid solution
    kUsage = 2,      // bad arguments or malformed input
    kExhausted = 3,  // a search cap was hit
};

// Runs one invocation. `args` excludes the program name. A file argument of
// "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace splitclust::cli
