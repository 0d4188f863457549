#pragma once

#include <ostream>
#include <span>
#include <string>

namespace ginv::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  // IndexTooLarge, V4Singular, SingularMatrix, ...
  kParseError = 2,   // malformed matrix file or command line
};

/// Runs one `ginv` command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ginv::cli
