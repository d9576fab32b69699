#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spincs {

// Runs the spincs command line on the given arguments (program name not
// included). Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace spincs
