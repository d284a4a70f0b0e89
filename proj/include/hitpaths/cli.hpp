#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hitpaths {

// Runs one command line (without the program name). Returns 0 for YES or
// success, 1 for NO and 2 for any error; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hitpaths
