#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bernkit {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 when every row is ok, 1 when any row fails, 2 on a
/// usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bernkit
