#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fjrw::cli {

/// Entry point shared by the binary and the tests. argv excludes the program
/// name. Returns the process exit code: 0 success, 2 parse error, 3
/// unsupported evaluation, 4 internal invariant violation.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace fjrw::cli
