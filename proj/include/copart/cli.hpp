#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copart::cli {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copart::cli
