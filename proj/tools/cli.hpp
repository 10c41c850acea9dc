#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracdecomp::cli {

// Exit codes: 0 success/feasible, 1 infeasible or flagged, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracdecomp::cli
