#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treepart {

// Runs the treepart command line. Exit codes: 0 success, 1 class violation
// or failed validation, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace treepart
