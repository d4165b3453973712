#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frankl/certificate.hpp"
#include "frankl/family.hpp"
#include "frankl/rational.hpp"
#include "frankl/search.hpp"

namespace frankl {

class LpError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RowKind { kUnion, kFrequency, kBox };

const char* to_string(RowKind kind);

/// One "<=" row. Variables are indexed by subset mask.
struct LpRow {
  RowKind kind = RowKind::kBox;
  /// union: the two sets; box: first is the bounded set; frequency: first
  /// is the element (1-based).
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  std::vector<std::pair<std::uint32_t, Rational>> coefficients;
  Rational rhs;
};

/// max c^T x  s.t.  rows, x >= 0.
struct LpProblem {
  int n = 0;
  long a = 0;
  std::size_t variables = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
};

/// Linear relaxation of the f(n,a) integer program: one union row
/// x_S + x_T - x_{S∪T} <= 1 per incomparable pair S < T, then one frequency
/// row per element, then one box row x_S <= 1 per mask. 1 <= n <= 9.
LpProblem build_relaxation(int n, long a);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kBudget };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kBudget;
  /// Optimal value; under kBudget, the best upper bound reached.
  Rational objective;
  std::vector<Rational> primal;  // by variable
  std::vector<Rational> dual;    // by row, all >= 0
  std::uint64_t pivots = 0;
  double seconds = 0.0;
};

/// Exact simplex. The dual min b^T y, A^T y >= c, y >= 0 is solved by a
/// revised simplex over rational numbers; the primal optimum is read off the
/// simplex multipliers. Pricing is Dantzig's rule, switching to Bland's rule
/// after a run of degenerate pivots. budget.max_nodes caps the pivot count.
LpSolution solve_exact(const LpProblem& problem, const SearchBudget& budget = {});

class DualInfeasible : public std::runtime_error {
 public:
  DualInfeasible(std::uint32_t column, Rational deficit);
  std::uint32_t column() const { return column_; }
  const Rational& deficit() const { return deficit_; }

 private:
  std::uint32_t column_;
  Rational deficit_;
};

using DualVector = std::vector<Rational>;

/// Checks y >= 0 and that each column's weighted sum reaches its objective
/// coefficient (excess allowed); returns b^T y. Throws DualInfeasible naming
/// the first short column, LpError on a negative or mis-sized vector.
Rational verify_dual_bound(const LpProblem& problem, const DualVector& y);

/// alpha on frequency rows, beta on (1,2,3) union rows, gamma on (2,2,4)
/// union rows, 1 on the box row of the empty set, 0 elsewhere.
DualVector certificate_to_dual(const DualCertificate& cert, const LpProblem& problem);

/// x^T c for a primal vector; throws LpError if any row or x >= 0 fails.
Rational check_primal_feasible(const LpProblem& problem, const std::vector<Rational>& x);

/// Sparse text format, one row per line:
///   lp <n> <a> <variables>
///   objective <mask>:<coeff> ...
///   <kind> <rhs> <mask>:<coeff> ...        kind in {union, frequency, box}
/// Union rows carry "<S> <T>" and frequency rows "<e>" right after the kind,
/// box rows "<S>". Rationals are written as p or p/q.
void write_problem(std::ostream& os, const LpProblem& problem);
LpProblem read_problem(std::istream& is);

nlohmann::json to_json(const LpProblem& problem, const LpSolution& solution);

}  // namespace frankl
