#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tridend::cli {

/// Runs one command (arguments without the program name). Returns 0 on
/// success, 1 when a verification reports violations and 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tridend::cli
