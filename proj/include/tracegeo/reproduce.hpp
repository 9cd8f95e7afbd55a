#pragma once

#include <string>
#include <vector>

namespace tracegeo {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  double seconds = 0.0;
  // One line per failing sub-case.
  std::vector<std::string> failures;
};

struct ReproduceOptions {
  // Replace the computed k(SL(4)) by 4 in check 1; the suite must then fail.
  bool inject_k_sl4_fault = false;
};

inline constexpr int kNumChecks = 11;

// Runs one check, 1..kNumChecks.
CheckResult run_check(int id, const ReproduceOptions& opts = {});

std::vector<CheckResult> run_reproduce(const ReproduceOptions& opts = {});

}  // namespace tracegeo
