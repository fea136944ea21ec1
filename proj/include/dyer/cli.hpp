#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dyer {

// Exit codes for the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // usage or syntax error
inline constexpr int kExitValidation = 2;  // semantic graph error
inline constexpr int kExitCapExceeded = 3; // enumeration cap hit

// Runs one CLI invocation. args excludes the program name. Reports go to
// out; diagnostics go to err and never interleave with report output.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dyer
