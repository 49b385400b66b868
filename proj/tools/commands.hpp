#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relalg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input_error = 2;

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace relalg::cli
