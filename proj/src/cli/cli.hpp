#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sentialg::cli {

// Runs one command line (without the program name). Data goes to files or
// `out`, diagnostics to `err`. Returns 0 on success, 1 on pipeline errors,
// 2 on usage and configuration errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sentialg::cli
