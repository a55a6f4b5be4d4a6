#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fano {

/// Full command-line front end; args excludes the program name. Returns the
/// process exit code (0 on success, nonzero with a one-line diagnostic on
/// err for parse or precondition failures).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fano
