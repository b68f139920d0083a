#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weiltate::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input = 2,
    exit_budget = 3,
    exit_internal = 4,
};

/// Full command line entry point; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weiltate::cli
