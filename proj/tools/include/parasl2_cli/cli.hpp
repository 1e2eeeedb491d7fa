#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parasl2::cli {

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out is given; diagnostics go to `err`.
/// Returns 0 when every check passed, 1 when any failed, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parasl2::cli
