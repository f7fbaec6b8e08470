#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace clans {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  // Over every (gamma, closed orbit below gamma): how often the reflection
  // count reaches the budget.
  std::uint64_t springer_pairs = 0;
  std::uint64_t springer_count_at_least_budget = 0;

  bool passed() const;
};

inline constexpr int kMaxVerifyN = 8;

/// Runs the exhaustive self-checks for every signature with 1 <= p + q <= max_n.
VerifyReport run_verification(int max_n, unsigned jobs);

/// One "PASS name: detail" / "FAIL name: detail" line per check, then the
/// statistic and an overall line.
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace clans
