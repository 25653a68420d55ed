#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammahodge::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,  // an internal invariant failed
    kInput = 2,     // malformed or out-of-contract input
    kPartial = 3,   // some grid points were skipped
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammahodge::cli
