#pragma once

#include <string>
#include <vector>

namespace frankl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Stretch goals are reported but never fail the suite.
  bool stretch = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct AcceptanceOptions {
  /// Also run f(5,5) by branch-and-bound and floor(f_r(8,8)).
  bool stretch = false;
  double stretch_f_seconds = 900.0;
  double stretch_lp_seconds = 1800.0;
};

/// The desk-scale reproduction suite: the f(a,a) table for a <= 4, the
/// bound table for 7 <= a <= 16, exact certificate identities for
/// 7 <= n <= 200, certificate duals at (7,7) and (8,8), the LP sandwich for
/// n <= 4, the missing-set theorems, the two lemma property suites,
/// monotonicity in n, and f/g duality. Each criterion also enforces its
/// wall-clock limit.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS [1] name (0.12 s / 10 s) detail" style line.
std::string format_criterion(const CriterionResult& r);

}  // namespace frankl
