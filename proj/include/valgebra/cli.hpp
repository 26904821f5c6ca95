#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace valgebra {

/// Runs one workbench invocation. Exit codes: 0 all checks hold, 1 some
/// identity fails (reports carry witnesses), 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valgebra
