#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polycone::cli {

/// Runs one command line (program name excluded). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 2 on domain errors and 1 on
/// usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycone::cli
