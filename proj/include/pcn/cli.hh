#ifndef PCN_CLI_HH
#define PCN_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace pcn
{
    enum ExitCode : int
    {
        exit_success = 0,
        exit_invalid_input = 1,
        exit_budget_exhausted = 2,
        exit_verification_failed = 3
    };

    /// Environment variable holding the default Hamming vertex budget.
    inline constexpr const char * vertex_budget_env = "PCN_VERTEX_BUDGET";

    /// Runs one command line (args excludes the program name).
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
