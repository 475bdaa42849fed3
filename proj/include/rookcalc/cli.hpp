#pragma once

// Command-line driver.  The executable is a one-line wrapper around run_cli so
// tests can drive every subcommand in-process.
//
// Exit codes:
//   0  success
//   1  an identity check failed
//   2  a table entry disagreed with its rook-sum cross-check
//   3  invalid parameters, parse error or unknown identity
//   4  oracle size cap exceeded

#include <iosfwd>
#include <string>
#include <vector>

namespace rookcalc::cli {

enum ExitCode : int {
    kOk = 0,
    kIdentityFailed = 1,
    kCrossCheckMismatch = 2,
    kInvalidInput = 3,
    kSizeCap = 4,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rookcalc::cli
