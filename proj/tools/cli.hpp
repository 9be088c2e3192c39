#pragma once

// Command-line front end. run_cli is the whole program minus process
// plumbing, so tests can drive it with argument vectors and string streams.

#include <ostream>
#include <string>
#include <vector>

namespace trigdunkl::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kBadArguments = 2,
    kNumericalFailure = 3,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigdunkl::cli
