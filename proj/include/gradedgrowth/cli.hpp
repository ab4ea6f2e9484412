#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gradedgrowth {

/// Runs the command line tool. `args` excludes the program name. Returns
/// the process exit status: 0 ok, 2 usage, 3 resource budget, 4 contract
/// violation or failed verification, 5 search failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradedgrowth
