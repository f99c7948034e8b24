#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qplane {

/// Command-line entry point; args exclude the program name.
/// Exit codes: 0 success, 1 a check did not come out as required, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qplane
