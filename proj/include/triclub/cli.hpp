#pragma once

#include <string>
#include <vector>

namespace triclub::cli {

// Exit codes: 0 = yes / ok with solution, 1 = no / infeasible / failed
// verification, 2 = usage or input error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& argv);

}  // namespace triclub::cli
