#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace horadam {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerifyFail = 2 };

/// Entry point of the `horadam_gf` tool (subcommands gf, series, eval,
/// verify). args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horadam
