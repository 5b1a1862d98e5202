#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncalg::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

struct Environment {
  /// CI_STRICT=1: randomized commands refuse to run without --seed.
  bool ci_strict = false;

  static Environment from_process();
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment{});

}  // namespace ncalg::cli
