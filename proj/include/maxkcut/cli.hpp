#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mkc::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kUsageError = 2,
    kCounterexample = 3,
};

/// Runs one command line (`args[0]` is the program name). Machine-readable
/// output goes to `out` or to the --out / --csv file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mkc::cli
