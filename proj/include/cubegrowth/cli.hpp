#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubegrowth {

// Exit codes of the command-line front end.
//   0  every requested identity holds
//   1  an identity or structural check failed, with a witness in the report
//   2  an input file or the command line could not be parsed
//   3  a precondition was violated (non-flag nerve, unknown vertex, ...)
inline constexpr int exit_ok = 0;
inline constexpr int exit_identity_failure = 1;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_precondition = 3;

/// Runs one CLI command (arguments without the program name) and writes the
/// report to `out` and error messages to `err`. Deterministic: identical
/// inputs produce byte-identical reports.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cubegrowth
