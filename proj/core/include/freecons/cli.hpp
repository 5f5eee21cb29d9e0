#ifndef FREECONS_CLI_HPP
#define FREECONS_CLI_HPP

#include <string>
#include <vector>

namespace freecons {

/// Exit code contract: 0 = answered/pass, 1 = verified-false or degenerate
/// input, 2 = usage/config error or cap exceeded.
struct RunResult {
    int exit_code = 0;
    std::string output;
};

/// Run one CLI invocation (args exclude the program name). Never throws;
/// failures are folded into the exit code and output diagnostics.
RunResult run_cli(const std::vector<std::string>& args);

} // namespace freecons

#endif
