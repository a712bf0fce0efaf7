#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvcount {

// Exit codes: 0 success, 1 input error, 2 cap or budget exceeded,
// 3 internal inconsistency between two counting routes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvcount
