#pragma once

#include <string>
#include <vector>

namespace fcpoly {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failing case, empty on success
};

/// Cross-check battery: every identity the library promises, bounded by n.
/// Enumeration-backed checks are additionally capped where full enumeration
/// would be unreasonable (normal forms at rank 14, permutations at the
/// stream cap, chain formulas at 12).
std::vector<CheckResult> run_verification(int n);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fcpoly
