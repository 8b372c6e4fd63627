#pragma once

#include <string>
#include <vector>

namespace cordial {

// Command-line front door. Subcommands: construct | verify | search | equiv
// | zeta. Exit codes: 0 = success and, where applicable, a positive verdict;
// 1 = ran fine but the verdict is negative (not cordial, equivalence fails,
// search exhausted with nothing); 2 = usage or data error.
int run_cli(const std::vector<std::string>& args);

}  // namespace cordial
