#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ybx {

// Exit codes: 0 ok, 1 usage/input error, 2 refuted with witness, 3 resource limit,
// 4 precondition unmet, 5 internal cross-check failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ybx
