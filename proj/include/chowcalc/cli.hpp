#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowcalc::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_domain_error = 1, ///< a library operation rejected the input; JSON error object on stdout
    exit_usage = 2,        ///< unknown subcommand, bad flag, malformed number
};

/// Runs the tool on argv-style arguments (without the program name).
/// Results go to out, diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace chowcalc::cli
