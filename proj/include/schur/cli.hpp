#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schur::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur::cli
