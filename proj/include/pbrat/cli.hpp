#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbrat::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  // Overflow, NotWellFormed, NotCoprime, NotNumerical, ...
  kUsageError = 2,
  kViolations = 3,  // a verify run found counterexamples
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`; usage messages and machine-readable error objects go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbrat::cli
