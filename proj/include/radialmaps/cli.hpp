#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radialmaps {

/// Entry point behind the command-line binary: args excludes the program
/// name. Returns 0 on success, 1 when a verification record fails, 2 on
/// usage, parse, or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radialmaps
