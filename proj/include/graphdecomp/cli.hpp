#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdecomp::cli {

// Runs one CLI invocation. Reports go to `out`, diagnostics to `err`, and
// `in` backs the `-` input path. Exit status: 0 success, 1 a check command
// found a negative result, 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace graphdecomp::cli
