#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gstp::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 2;     // bad flags, unreadable or invalid input
inline constexpr int exit_abort = 3;     // overflow, verify capacity abort, failed verification
inline constexpr int exit_capacity = 4;  // solver capacity exceeded

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to `path` through a temporary file and a rename, so a
/// reader never observes a partial file.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace gstp::cli
