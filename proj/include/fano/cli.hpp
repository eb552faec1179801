#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fano {

inline constexpr const char* kVersion = "0.1.0";

// Runs the command line given as argv-style arguments (without the program
// name). Returns the process exit code: 0 clean, 2 when comparison flags
// were raised, 1 on error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fano
