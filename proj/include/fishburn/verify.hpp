#pragma once

#include <string>
#include <vector>

#include "fishburn/enumeration.hpp"

namespace fishburn {

struct CheckResult {
  std::string name;
  int n = 0;
  bool passed = true;
  /// First failing input, empty on success.
  std::string counterexample;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const noexcept;
  std::size_t failures() const noexcept;
  /// One "PASS name (n=..)" / "FAIL ..." line per check plus a summary.
  std::string text() const;
  /// One "name n pass|fail [counterexample]" record per line.
  std::string records() const;
};

struct VerifyOptions {
  int n_max = 0;
  /// Sum laws run over pairs with |x| + |y| <= pair_total; negative means
  /// n_max.
  int pair_total = -1;
  /// Threads for fanning out checks; each check touches only its own data
  /// and shared read-only inputs. <= 0 uses the runtime default.
  int jobs = 1;
};

/// Runs every identity for each n <= n_max. Throws LIMIT_EXCEEDED when
/// n_max (or pair_total) passes the structure cap; check failures are data.
VerifyReport verify(const VerifyOptions& options, const Limits& limits = Limits{});

}  // namespace fishburn
