/* Command-line front end; returns the process exit code. */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace auslander {

// exit 0 on success, 1 on domain errors, 2 on usage errors
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace auslander
