#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace swell::cli {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 2 on argument errors and 1 on numerical failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swell::cli
