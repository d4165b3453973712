#include <doctest.h>

#include <map>
#include <sstream>

#include "frankl/lp.hpp"
#include "oracles.hpp"

using namespace frankl;

namespace {

std::size_t count_kind(const LpProblem& p, RowKind kind) {
  std::size_t c = 0;
  for (const auto& r : p.rows) c += r.kind == kind;
  return c;
}

}  // namespace

TEST_CASE("relaxation has the expected rows") {
  for (int n = 1; n <= 6; ++n) {
    auto p = build_relaxation(n, 2);
    CHECK(p.variables == (1u << n));
    CHECK(count_kind(p, RowKind::kUnion) == oracle::incomparable_pairs(n));
    CHECK(count_kind(p, RowKind::kFrequency) == static_cast<std::size_t>(n));
    CHECK(count_kind(p, RowKind::kBox) == (1u << n));
  }
  CHECK(count_kind(build_relaxation(3, 3), RowKind::kUnion) == 9);
  auto p = build_relaxation(3, 5);
  for (const auto& r : p.rows) {
    if (r.kind == RowKind::kFrequency) CHECK(r.rhs == 5);
    if (r.kind == RowKind::kUnion) {
      CHECK(r.rhs == 1);
      std::map<std::uint32_t, Rational> c(r.coefficients.begin(), r.coefficients.end());
      CHECK(c[r.first] == 1);
      CHECK(c[r.second] == 1);
      CHECK(c[r.first | r.second] == -1);
    }
  }
  CHECK_THROWS_AS(build_relaxation(10, 3), LpError);
  CHECK_THROWS_AS(build_relaxation(3, 0), LpError);
}

TEST_CASE("exact optima for small relaxations") {
  auto s = solve_exact(build_relaxation(3, 3));
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.objective == Rational(13, 2));
  auto t = solve_exact(build_relaxation(4, 4));
  REQUIRE(t.status == LpStatus::kOptimal);
  CHECK(t.objective == Rational(48, 5));
  // Frequency caps at or above 2^(n-1) do not bind.
  CHECK(solve_exact(build_relaxation(3, 4)).objective == 8);
}

TEST_CASE("strong duality and the integer sandwich for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (long a = 1; a <= (1L << (n - 1)); ++a) {
      auto p = build_relaxation(n, a);
      auto s = solve_exact(p);
      REQUIRE(s.status == LpStatus::kOptimal);
      CHECK(check_primal_feasible(p, s.primal) == s.objective);
      CHECK(verify_dual_bound(p, s.dual) == s.objective);
      // The optimal family's indicator is feasible, so it sits below f_r.
      auto f = compute_f(n, a);
      std::vector<Rational> x(p.variables, Rational(0));
      for (auto m : f.witness.masks()) x[m] = 1;
      CHECK(check_primal_feasible(p, x) == static_cast<long>(f.value));
      CHECK(static_cast<long>(f.value) <= s.objective);
    }
  }
}

TEST_CASE("certificate dual: column sums are the certificate coefficients") {
  auto p = build_relaxation(7, 7);
  auto cert = make_certificate(7);
  auto y = certificate_to_dual(cert, p);
  std::vector<Rational> col(p.variables, Rational(0));
  for (std::size_t i = 0; i < p.rows.size(); ++i)
    for (const auto& [v, c] : p.rows[i].coefficients) col[v] += c * y[i];
  for (std::uint32_t s = 0; s < p.variables; ++s) CHECK(col[s] == cert.coefficients[popcount(s)]);
  CHECK(verify_dual_bound(p, y) == bar_f(7, 7));
}

TEST_CASE("certificate dual at (8,8) gives the closed-form bound") {
  auto p = build_relaxation(8, 8);
  CHECK(verify_dual_bound(p, certificate_to_dual(make_certificate(8), p)) == bar_f(8, 8));
  CHECK_THROWS_AS(certificate_to_dual(make_certificate(7), p), LpError);
}

TEST_CASE("an infeasible dual is rejected with the short column") {
  auto p = build_relaxation(7, 7);
  auto cert = make_certificate(7);
  cert.alpha = 0;
  try {
    verify_dual_bound(p, certificate_to_dual(cert, p));
    FAIL("expected DualInfeasible");
  } catch (const DualInfeasible& e) {
    CHECK(e.deficit() > 0);
    CHECK(e.column() != 0);
  }
  std::vector<Rational> y(p.rows.size(), Rational(0));
  y[0] = -1;
  CHECK_THROWS_AS(verify_dual_bound(p, y), LpError);
  CHECK_THROWS_AS(verify_dual_bound(p, DualVector(3)), LpError);
}

TEST_CASE("primal feasibility check rejects violated rows") {
  auto p = build_relaxation(3, 3);
  std::vector<Rational> x(8, Rational(1));
  CHECK_THROWS_AS(check_primal_feasible(p, x), LpError);
  x.assign(8, Rational(0));
  x[1] = x[2] = 1;  // {1},{2} without {1,2}
  CHECK_THROWS_AS(check_primal_feasible(p, x), LpError);
}

TEST_CASE("pivot budget") {
  SearchBudget budget;
  budget.max_nodes = 2;
  auto s = solve_exact(build_relaxation(4, 4), budget);
  CHECK(s.status == LpStatus::kBudget);
  CHECK(s.pivots <= 2);
}

TEST_CASE("text format round trip") {
  auto p = build_relaxation(4, 3);
  std::ostringstream out;
  write_problem(out, p);
  std::istringstream in(out.str());
  auto q = read_problem(in);
  CHECK(q.n == p.n);
  CHECK(q.a == p.a);
  CHECK(q.variables == p.variables);
  CHECK(q.objective == p.objective);
  REQUIRE(q.rows.size() == p.rows.size());
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    CHECK(q.rows[i].kind == p.rows[i].kind);
    CHECK(q.rows[i].first == p.rows[i].first);
    CHECK(q.rows[i].second == p.rows[i].second);
    CHECK(q.rows[i].rhs == p.rows[i].rhs);
    CHECK(q.rows[i].coefficients == p.rows[i].coefficients);
  }
  std::ostringstream again;
  write_problem(again, q);
  CHECK(again.str() == out.str());
  std::istringstream bad("lp 3 3 8\nobjective 0:1\nbogus 1 2\n");
  CHECK_THROWS_AS(read_problem(bad), LpError);
}

TEST_CASE("hand-made problems: unbounded and infeasible") {
  LpProblem p;
  p.n = 1;
  p.a = 1;
  p.variables = 2;
  p.objective = {Rational(1), Rational(1)};
  p.rows.push_back({RowKind::kBox, 0, 0, {{0, Rational(1)}}, Rational(1)});
  CHECK(solve_exact(p).status == LpStatus::kUnbounded);
  p.rows.push_back({RowKind::kBox, 1, 0, {{1, Rational(1)}}, Rational(1)});
  auto s = solve_exact(p);
  CHECK(s.status == LpStatus::kOptimal);
  CHECK(s.objective == 2);
  p.rows.push_back({RowKind::kFrequency, 1, 0, {{0, Rational(-1)}}, Rational(-2)});
  CHECK(solve_exact(p).status == LpStatus::kInfeasible);
}

TEST_CASE("json report") {
  auto p = build_relaxation(3, 3);
  auto j = to_json(p, solve_exact(p));
  CHECK(j["status"] == "optimal");
  CHECK(j["objective"] == "13/2");
  CHECK(j["floor"] == "6");
  CHECK(j["primal"].size() == 8);
}
