#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lacuna {

// Command-line front end. Exit codes: 0 success, 2 input errors (pole,
// divergence, parse failures), 1 internal failure (including a value whose
// certified digits fell short of the request).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lacuna
