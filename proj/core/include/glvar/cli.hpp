#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glvar::cli {

/// Run the command line given as argv-style arguments (program name not
/// included). Returns the process exit code: 0 success, 1 computation
/// error or failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace glvar::cli
