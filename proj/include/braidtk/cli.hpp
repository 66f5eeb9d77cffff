#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidtk {

/// Run the command line interface on argv-style arguments (program name not
/// included).  Exit codes: 0 success or checked-true, 1 checked-false,
/// 2 usage or parse error, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidtk
