#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.
//
// Commands: spectrum, nl, point, verify, explore, tables.
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.

#include <iosfwd>
#include <span>
#include <string>

namespace rotsym::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args[0] is the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

struct SuiteOptions {
  std::string suite = "all";  // tables | theorem | lemmas | recurrences | all
  int max_n = 14;
  int threads = 1;
  int cap = 26;
  /// Upper end of the big-integer sequence checks.
  int sequence_n = 10000;
};

struct SuiteResult {
  bool passed = false;
  /// Canonical JSON report (sorted keys, no timing).
  std::string report;
};

SuiteResult run_suite(const SuiteOptions& options);

}  // namespace rotsym::cli
