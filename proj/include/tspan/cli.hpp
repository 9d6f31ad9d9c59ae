#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tspan {

/// Runs one subcommand (args exclude the program name). Exit codes:
/// 0 success / pass, 1 verification failure (witness printed), 2 usage or
/// input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspan
