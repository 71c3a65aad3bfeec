#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgratio::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kOk = 0,
    kTheoremMismatch = 1,
    kUsage = 2,
    kBudgetExhausted = 3,
    kResourceCap = 4,
};

/// Runs one subcommand. `args` excludes the program name. Nothing is written to std::cout/cerr directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace dgratio::cli
