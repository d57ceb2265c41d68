#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zk {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;  // hypothesis or verdict failure
inline constexpr int kExitUsage = 2;    // parse or usage error

/// Runs one command line (program name excluded). Data goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zk
