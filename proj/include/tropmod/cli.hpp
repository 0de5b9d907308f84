#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropmod {

/// Runs the command line tool on `args` (without the program name). Returns 0 on success,
/// 1 on parse or validation errors and 2 when a resource cap refuses the request.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tropmod
