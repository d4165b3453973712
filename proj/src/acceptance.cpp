#include "frankl/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "frankl/certificate.hpp"
#include "frankl/lp.hpp"
#include "frankl/search.hpp"
#include "frankl/theorems.hpp"

namespace frankl {

namespace {

using Clock = std::chrono::steady_clock;

// The check returns true on success and writes a short summary to detail.
CriterionResult timed(int id, std::string name, double limit, bool stretch,
                      const std::function<bool(std::ostringstream&)>& check) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.stretch = stretch;
  r.limit_seconds = limit;
  std::ostringstream detail;
  const auto start = Clock::now();
  bool ok = false;
  try {
    ok = check(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (ok && r.seconds > limit) {
    ok = false;
    detail << " [over time limit]";
  }
  r.passed = ok;
  r.detail = detail.str();
  return r;
}

bool f_table(std::ostringstream& out) {
  const std::size_t expected[] = {2, 4, 5, 8};
  bool ok = true;
  for (int a = 1; a <= 4; ++a) {
    const FResult f = compute_f(a, a);
    out << "f(" << a << "," << a << ")=" << f.value << ' ';
    ok &= f.proven_optimal && f.value == expected[a - 1];
    ok &= is_union_closed(f.witness) && f.witness.size() == f.value &&
          max_frequency(f.witness).count <= static_cast<std::size_t>(a);
  }
  return ok;
}

bool bound_rows(std::ostringstream& out) {
  const long expected[] = {24, 30, 37, 46, 55, 64, 75, 86, 99, 112};
  const auto rows = bound_table(7, 16);
  bool ok = rows.size() == 10;
  for (std::size_t i = 0; ok && i < rows.size(); ++i) {
    ok &= rows[i].a == static_cast<long>(7 + i) && rows[i].floor_value == expected[i];
    out << rows[i].floor_value.get_str() << ' ';
  }
  const auto notes = bound_table_notes(rows);
  const bool noted = notes.size() == 1 && notes[0].find("36") != std::string::npos &&
                     notes[0].find("37") != std::string::npos;
  if (noted) out << "| note: " << notes[0];
  return ok && noted;
}

bool certificate_identities(std::ostringstream& out) {
  int failures = 0;
  for (int n = 7; n <= 200; ++n) {
    if (!verify_certificate(make_certificate(n)).all_passed()) ++failures;
  }
  for (long a = 7; a <= 200; ++a) {
    if (bar_f_diag(a) != bar_f(static_cast<int>(a), a)) ++failures;
  }
  out << "n,a in 7..200, failures=" << failures;
  return failures == 0;
}

bool dual_cross_check(std::ostringstream& out) {
  bool ok = true;
  for (int n : {7, 8}) {
    const LpProblem p = build_relaxation(n, n);
    const Rational value = verify_dual_bound(p, certificate_to_dual(make_certificate(n), p));
    out << "(" << n << "," << n << ")=" << to_string(value) << ' ';
    ok &= value == bar_f(n, n);
  }
  ok &= bar_f(7, 7) == Rational(387, 16);
  return ok;
}

bool lp_sandwich(std::ostringstream& out) {
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (long a = 1; a <= static_cast<long>(power_set_size(n) / 2); ++a) {
      const LpProblem p = build_relaxation(n, a);
      const LpSolution s = solve_exact(p);
      if (s.status != LpStatus::kOptimal) {
        out << "not optimal at (" << n << "," << a << ")";
        return false;
      }
      const std::size_t f = compute_f(n, a).value;
      if (Rational(static_cast<unsigned long>(f)) > s.objective) {
        out << "f > f_r at (" << n << "," << a << ")";
        return false;
      }
      if (check_primal_feasible(p, s.primal) != s.objective || verify_dual_bound(p, s.dual) != s.objective) {
        out << "duality check failed at (" << n << "," << a << ")";
        return false;
      }
      ++checked;
    }
  }
  out << checked << " (n,a) pairs, f <= f_r and primal = dual exactly";
  return true;
}

bool section_theorems(std::ostringstream& out) {
  bool ok = true;
  for (int n = 3; n <= 5; ++n) {
    const auto r = verify_g_theorem(n);
    ok &= r.status == ClaimStatus::kVerified && r.details["expected"] == (std::size_t{1} << (n - 1));
    out << "g(n=" << n << ")=" << r.details["expected"].dump() << ':' << to_string(r.status) << ' ';
  }
  const std::size_t expected[] = {1, 2, 5, 12};
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_f_theorem(n);
    ok &= r.status == ClaimStatus::kVerified && r.details["upper_bound"] == expected[n - 1] &&
          r.details["lower_bound"] == expected[n - 1];
    out << "f(n=" << n << ")=" << r.details["upper_bound"].dump() << ' ';
  }
  for (int n = 1; n <= 16; ++n) {
    const SetFamily f = powerset_minus_singletons(n);  // throws on a broken postcondition
    ok &= f.size() == power_set_size(n) - n;
  }
  out << "construction ok for n<=16";
  return ok;
}

bool lemma_suite(std::ostringstream& out) {
  std::size_t violations = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& r : verify_lemmas_exhaustive(n)) violations += r.violations.size();
  }
  for (int n = 5; n <= 8; ++n) {
    for (const auto& r : verify_lemmas_random(n, 1000)) violations += r.violations.size();
  }
  out << "exhaustive n<=4 + 4x1000 random closures, violations=" << violations;
  return violations == 0;
}

bool monotonicity(std::ostringstream& out) {
  const std::size_t plateau[] = {2, 4, 5};
  bool ok = true;
  for (long a = 1; a <= 3; ++a) {
    const auto r = verify_monotonicity(a, 5);
    out << "a=" << a << " f(1..5)=" << r.details["values"].dump() << ' ' << to_string(r.status);
    if (!r.violations.empty()) out << " " << nlohmann::json(r.violations).dump();
    out << "; ";
    ok &= r.status == ClaimStatus::kVerified;
    const auto& values = r.details["values"];
    for (int n = std::max<long>(1, a - 1); n <= 5; ++n) ok &= values[n - 1] == plateau[a - 1];
  }
  return ok;
}

bool duality(std::ostringstream& out) {
  bool ok = true;
  for (int n = 3; n <= 4; ++n) {
    const auto d = check_fg_duality(n, static_cast<long>(power_set_size(n)));
    out << "n=" << n << " violations=" << d.violations.size() << ' ';
    ok &= d.violations.empty();
  }
  return ok;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "f(a,a) table for a<=4", 10, false, f_table));
  if (options.stretch) {
    out.push_back(timed(1, "stretch: f(5,5)=9 by branch-and-bound", options.stretch_f_seconds, true,
                        [&](std::ostringstream& o) {
                          SearchBudget b;
                          b.max_seconds = options.stretch_f_seconds;
                          const FResult f = compute_f(5, 5, b);
                          o << "value=" << f.value << " proven=" << f.proven_optimal << " nodes=" << f.stats.nodes;
                          return f.proven_optimal && f.value == 9;
                        }));
  }
  out.push_back(timed(2, "bound table 7..16", 1, false, bound_rows));
  out.push_back(timed(3, "certificate identities n,a in 7..200", 5, false, certificate_identities));
  out.push_back(timed(4, "certificate dual bound at (7,7) and (8,8)", 60, false, dual_cross_check));
  out.push_back(timed(5, "LP sandwich f <= f_r for n<=4", 300, false, lp_sandwich));
  if (options.stretch) {
    out.push_back(timed(5, "stretch: floor(f_r(8,8))=20", options.stretch_lp_seconds, true,
                        [&](std::ostringstream& o) {
                          SearchBudget b;
                          b.max_seconds = options.stretch_lp_seconds;
                          const LpSolution s = solve_exact(build_relaxation(8, 8), b);
                          o << "status=" << to_string(s.status) << " objective=" << to_string(s.objective)
                            << " pivots=" << s.pivots;
                          return s.status == LpStatus::kOptimal && floor(s.objective) == 20;
                        }));
  }
  out.push_back(timed(6, "missing-set theorems (g for n=3..5, f for n=1..4)", 120, false, section_theorems));
  out.push_back(timed(7, "lemma property suite", 300, false, lemma_suite));
  out.push_back(timed(8, "monotonicity and plateau for a=1,2,3", 120, false, monotonicity));
  out.push_back(timed(9, "f/g duality n=3,4", 300, false, duality));
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : (r.stretch ? "MISS" : "FAIL")) << " [" << r.id << "] " << r.name << " (";
  os.precision(3);
  os << std::fixed << r.seconds << " s / " << r.limit_seconds << " s) " << r.detail;
  return os.str();
}

}  // namespace frankl
