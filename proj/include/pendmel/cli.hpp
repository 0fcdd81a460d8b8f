#pragma once

#include <ostream>

namespace pendmel {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse_error = 2,
    exit_domain_error = 3,
    exit_identically_zero = 4,
    exit_verify_breach = 5,
    exit_ect_failure = 6,
};

/// Entry point of the pendmel command line tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pendmel
