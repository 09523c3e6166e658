#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace azeta::cli {

// args[0] is the program name. Returns the process exit code:
// 0 success, 1 an identity failed, 2 bad input or insufficient order.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace azeta::cli
