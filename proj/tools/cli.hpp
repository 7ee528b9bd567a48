#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gkp::cli {

/// Runs one subcommand; `args` excludes the program name. Returns 0 on
/// success or match, 1 on a verification mismatch, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkp::cli
