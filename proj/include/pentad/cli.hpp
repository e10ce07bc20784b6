#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentad {

// Command dispatch for the pentad tool. Returns the process exit status:
// 0 success, 1 domain error (JSON error object on stdout), 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pentad
