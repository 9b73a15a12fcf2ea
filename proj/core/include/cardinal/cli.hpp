#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cardinal {

// Full command-line driver. args excludes the program name. Returns the
// process exit code: 0 success, 1 verification failure, 2 usage error.
// All output goes to the supplied streams so tests can capture it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cardinal
