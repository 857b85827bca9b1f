#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jstir {

// Exit codes of run_cli.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Runs one `jstir` invocation. `args` excludes the program name. Output goes
// to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jstir
