#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polydecomp::cli {

enum ExitCode : int {
    ok = 0,
    verify_failed = 1,
    input_error = 2,
    internal_error = 3,
};

/// Runs `polydecomp <args...>`; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace polydecomp::cli
