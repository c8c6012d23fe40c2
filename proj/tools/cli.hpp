#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibsigma::cli {

// Exit codes: 0 success, 1 property violation, 2 usage error, 3 precision failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibsigma::cli
