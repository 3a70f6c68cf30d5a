#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace photongas {

/// Run the command-line driver on `args` (program name excluded), writing
/// CSV results to `out` (or to the file named by --out) and diagnostics to
/// `err`.  Returns 0 on success, 2 on usage/validation errors, 3 on
/// numerical non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace photongas
