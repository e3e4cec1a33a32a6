#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permharmonic::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/**
 * Runs the command line given in `args` (without the program name).
 * Vector input is read from the named file, or from `in` when the file
 * argument is absent or "-".
 */
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace permharmonic::cli
