#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wpd::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

// Runs the command line `args` (args[0] is the program name). The report goes
// to `out`, diagnostics and timing to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wpd::cli
