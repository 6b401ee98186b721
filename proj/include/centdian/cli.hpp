#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace centdian {

// Full command-line surface. args holds everything after the program name.
// Returns the process exit code: 0 success, 2 validation or usage error,
// 3 enumeration or numerical limit. Reports go to out; diagnostics and
// timing go to err, keeping out byte-stable across runs.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace centdian
