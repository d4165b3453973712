#include "frankl/lp.hpp"

#include <chrono>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace frankl {

const char* to_string(RowKind kind) {
  switch (kind) {
    case RowKind::kUnion:
      return "union";
    case RowKind::kFrequency:
      return "frequency";
    case RowKind::kBox:
      return "box";
  }
  return "?";
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kBudget:
      return "budget";
  }
  return "?";
}

LpProblem build_relaxation(int n, long a) {
  if (n < 1 || n > 9) throw LpError("relaxation needs 1 <= n <= 9, got " + std::to_string(n));
  if (a < 1) throw LpError("frequency cap must be >= 1, got " + std::to_string(a));
  LpProblem p;
  p.n = n;
  p.a = a;
  p.variables = power_set_size(n);
  p.objective.assign(p.variables, Rational(1));

  for (std::uint32_t s = 0; s < p.variables; ++s) {
    for (std::uint32_t t = s + 1; t < p.variables; ++t) {
      const std::uint32_t u = s | t;
      if (u == s || u == t) continue;
      p.rows.push_back({RowKind::kUnion, s, t, {{s, Rational(1)}, {t, Rational(1)}, {u, Rational(-1)}}, Rational(1)});
    }
  }
  for (int e = 0; e < n; ++e) {
    LpRow row{RowKind::kFrequency, static_cast<std::uint32_t>(e + 1), 0, {}, Rational(a)};
    for (std::uint32_t s = 0; s < p.variables; ++s) {
      if (s >> e & 1u) row.coefficients.emplace_back(s, Rational(1));
    }
    p.rows.push_back(std::move(row));
  }
  for (std::uint32_t s = 0; s < p.variables; ++s) {
    p.rows.push_back({RowKind::kBox, s, 0, {{s, Rational(1)}}, Rational(1)});
  }
  return p;
}

// ---------------------------------------------------------------------------
// Revised simplex on the dual
//
//   min b^T y   s.t.   A^T y - w (+ art) = c,   y, w, art >= 0.
//
// There is one equality per primal variable, so the basis is
// variables x variables regardless of the row count. Column indices: y_r in
// [0, R), w_j in [R, R+N), artificial j in [R+N, R+2N).

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDegenerateRunBeforeBland = 25;

class DualSimplex {
 public:
  DualSimplex(const LpProblem& p, const SearchBudget& budget)
      : p_(p),
        budget_(budget),
        n_(p.variables),
        r_(p.rows.size()),
        binv_(n_, std::vector<Rational>(n_)),
        basis_(n_),
        xb_(n_),
        pi_(n_),
        art_sign_(n_, 1),
        basic_(r_ + 2 * n_, 0),
        start_(Clock::now()) {}

  LpSolution solve() {
    crash();
    bool any_art = false;
    for (std::size_t i = 0; i < n_; ++i) any_art |= is_art(basis_[i]);

    if (any_art) {
      phase_ = 1;
      recompute_pi();
      const Outcome o = iterate();
      if (o == Outcome::kBudget) return finish(LpStatus::kBudget);
      Rational infeas;
      for (std::size_t i = 0; i < n_; ++i) {
        if (is_art(basis_[i])) infeas += xb_[i];
      }
      if (infeas > 0) {
        // No dual solution: the primal is unbounded or infeasible. With
        // b >= 0 the origin is primal feasible, so it is unbounded.
        bool origin_feasible = true;
        for (const auto& row : p_.rows) origin_feasible &= row.rhs >= 0;
        return finish(origin_feasible ? LpStatus::kUnbounded : LpStatus::kInfeasible);
      }
      drive_out_artificials();
    }
    phase_ = 2;
    recompute_pi();
    switch (iterate()) {
      case Outcome::kOptimal:
        return finish(LpStatus::kOptimal);
      case Outcome::kUnbounded:
        return finish(LpStatus::kInfeasible);
      case Outcome::kBudget:
        return finish(LpStatus::kBudget);
    }
    return finish(LpStatus::kBudget);
  }

 private:
  enum class Outcome { kOptimal, kUnbounded, kBudget };

  bool is_y(std::size_t q) const { return q < r_; }
  bool is_w(std::size_t q) const { return q >= r_ && q < r_ + n_; }
  bool is_art(std::size_t q) const { return q >= r_ + n_; }

  Rational cost(std::size_t q) const {
    if (phase_ == 1) return is_art(q) ? Rational(1) : Rational(0);
    return is_y(q) ? p_.rows[q].rhs : Rational(0);
  }

  template <typename F>
  void for_each_entry(std::size_t q, F&& f) const {
    if (is_y(q)) {
      for (const auto& [var, coef] : p_.rows[q].coefficients) f(var, coef);
    } else if (is_w(q)) {
      f(static_cast<std::uint32_t>(q - r_), Rational(-1));
    } else {
      f(static_cast<std::uint32_t>(q - r_ - n_), Rational(art_sign_[q - r_ - n_]));
    }
  }

  Rational reduced_cost(std::size_t q) const {
    Rational d = cost(q);
    for_each_entry(q, [&](std::uint32_t var, const Rational& coef) {
      if (coef == 1) {
        d -= pi_[var];
      } else if (coef == -1) {
        d += pi_[var];
      } else {
        d -= coef * pi_[var];
      }
    });
    return d;
  }

  void set_basic(std::size_t slot, std::size_t q) {
    basic_[basis_[slot]] = 0;
    basis_[slot] = q;
    basic_[q] = 1;
  }

  // Diagonal starting basis: a box-like singleton row when c_j >= 0, the
  // surplus when c_j <= 0, an artificial otherwise.
  void crash() {
    std::vector<std::size_t> singleton(n_, std::numeric_limits<std::size_t>::max());
    for (std::size_t r = 0; r < r_; ++r) {
      const auto& coefs = p_.rows[r].coefficients;
      if (coefs.size() == 1 && coefs[0].second > 0 && singleton[coefs[0].first] == std::numeric_limits<std::size_t>::max()) {
        singleton[coefs[0].first] = r;
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& c = p_.objective[j];
      std::size_t q;
      Rational diag;
      if (c >= 0 && singleton[j] != std::numeric_limits<std::size_t>::max()) {
        q = singleton[j];
        diag = p_.rows[q].coefficients[0].second;
      } else if (c <= 0) {
        q = r_ + j;
        diag = -1;
      } else {
        q = r_ + n_ + j;
        diag = 1;
      }
      basis_[j] = q;
      basic_[q] = 1;
      binv_[j][j] = 1 / diag;
      xb_[j] = c / diag;
    }
  }

  void recompute_pi() {
    for (std::size_t k = 0; k < n_; ++k) pi_[k] = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const Rational cb = cost(basis_[i]);
      if (cb == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        if (binv_[i][k] != 0) pi_[k] += cb * binv_[i][k];
      }
    }
  }

  std::vector<Rational> direction(std::size_t q) const {
    std::vector<Rational> u(n_);
    for_each_entry(q, [&](std::uint32_t var, const Rational& coef) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (binv_[i][var] != 0) u[i] += binv_[i][var] * coef;
      }
    });
    return u;
  }

  void pivot(std::size_t slot, std::size_t q, const std::vector<Rational>& u, const Rational& d) {
    const Rational up = u[slot];
    const Rational theta = xb_[slot] / up;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != slot && u[i] != 0) xb_[i] -= theta * u[i];
    }
    xb_[slot] = theta;

    auto& row = binv_[slot];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < n_; ++k) {
      if (row[k] != 0) nz.push_back(k);
    }
    if (d != 0) {
      const Rational step = d / up;
      for (std::size_t k : nz) pi_[k] += step * row[k];
    }
    for (std::size_t k : nz) row[k] /= up;
    Rational scratch;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == slot || u[i] == 0) continue;
      auto& target = binv_[i];
      for (std::size_t k : nz) {
        scratch = u[i] * row[k];
        target[k] -= scratch;
      }
    }
    set_basic(slot, q);
    ++pivots_;
  }

  bool out_of_budget() const {
    if (budget_.max_nodes && pivots_ >= *budget_.max_nodes) return true;
    if (budget_.max_seconds &&
        std::chrono::duration<double>(Clock::now() - start_).count() > *budget_.max_seconds) {
      return true;
    }
    return false;
  }

  Outcome iterate() {
    std::uint64_t degenerate_run = 0;
    const std::size_t columns = phase_ == 1 ? r_ + 2 * n_ : r_ + n_;
    for (;;) {
      if (out_of_budget()) return Outcome::kBudget;
      const bool bland = degenerate_run >= kDegenerateRunBeforeBland;

      std::size_t entering = columns;
      Rational best_d;
      for (std::size_t q = 0; q < columns; ++q) {
        if (basic_[q]) continue;
        if (is_art(q)) continue;  // artificials never re-enter
        Rational d = reduced_cost(q);
        if (d >= 0) continue;
        if (bland) {
          entering = q;
          best_d = d;
          break;
        }
        if (entering == columns || d < best_d) {
          entering = q;
          best_d = d;
        }
      }
      if (entering == columns) return Outcome::kOptimal;

      const auto u = direction(entering);
      std::size_t leave = n_;
      Rational best_ratio;
      for (std::size_t i = 0; i < n_; ++i) {
        if (u[i] <= 0) continue;
        Rational ratio = xb_[i] / u[i];
        if (leave == n_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == n_) return Outcome::kUnbounded;

      degenerate_run = xb_[leave] == 0 ? degenerate_run + 1 : 0;
      pivot(leave, entering, u, best_d);
    }
  }

  // Artificials left basic at level zero are swapped for surplus columns;
  // a nonzero in row i of B^-1 at position j means w_j is nonbasic.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!is_art(basis_[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (binv_[i][j] == 0 || basic_[r_ + j]) continue;
        const auto u = direction(r_ + j);
        if (u[i] == 0) continue;
        pivot(i, r_ + j, u, Rational(0));
        break;
      }
    }
  }

  LpSolution finish(LpStatus status) {
    LpSolution s;
    s.status = status;
    s.pivots = pivots_;
    s.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (status == LpStatus::kOptimal || (status == LpStatus::kBudget && phase_ == 2)) {
      s.dual.assign(r_, Rational(0));
      for (std::size_t i = 0; i < n_; ++i) {
        if (is_y(basis_[i])) s.dual[basis_[i]] = xb_[i];
      }
      for (std::size_t r = 0; r < r_; ++r) {
        if (s.dual[r] != 0) s.objective += p_.rows[r].rhs * s.dual[r];
      }
      s.primal = pi_;
    }
    if (status == LpStatus::kOptimal) {
      Rational primal_value;
      for (std::size_t j = 0; j < n_; ++j) primal_value += p_.objective[j] * pi_[j];
      if (primal_value != s.objective) throw std::logic_error("simplex finished without strong duality");
    }
    return s;
  }

  const LpProblem& p_;
  SearchBudget budget_;
  std::size_t n_;
  std::size_t r_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> xb_;
  std::vector<Rational> pi_;
  std::vector<int> art_sign_;
  std::vector<std::uint8_t> basic_;
  int phase_ = 2;
  std::uint64_t pivots_ = 0;
  Clock::time_point start_;
};

}  // namespace

LpSolution solve_exact(const LpProblem& problem, const SearchBudget& budget) {
  budget.validate();
  if (problem.objective.size() != problem.variables) throw LpError("objective size mismatch");
  for (const auto& row : problem.rows) {
    for (const auto& [var, coef] : row.coefficients) {
      if (var >= problem.variables) throw LpError("row references unknown variable");
    }
  }
  return DualSimplex(problem, budget).solve();
}

// ---------------------------------------------------------------------------

DualInfeasible::DualInfeasible(std::uint32_t column, Rational deficit)
    : std::runtime_error("dual infeasible at column " + std::to_string(column) + " (set " + format_set(column) +
                         "): short by " + frankl::to_string(deficit)),
      column_(column),
      deficit_(std::move(deficit)) {}

Rational verify_dual_bound(const LpProblem& problem, const DualVector& y) {
  if (y.size() != problem.rows.size()) throw LpError("dual vector has wrong length");
  std::vector<Rational> column(problem.variables);
  Rational value;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r] < 0) throw LpError("negative multiplier on row " + std::to_string(r));
    if (y[r] == 0) continue;
    for (const auto& [var, coef] : problem.rows[r].coefficients) column[var] += y[r] * coef;
    value += y[r] * problem.rows[r].rhs;
  }
  for (std::uint32_t j = 0; j < problem.variables; ++j) {
    if (column[j] < problem.objective[j]) throw DualInfeasible(j, problem.objective[j] - column[j]);
  }
  return value;
}

DualVector certificate_to_dual(const DualCertificate& cert, const LpProblem& problem) {
  if (cert.n != problem.n) {
    throw LpError("certificate is for n=" + std::to_string(cert.n) + ", problem for n=" + std::to_string(problem.n));
  }
  if (problem.n < 7) throw LpError("certificate duals need n >= 7");
  DualVector y(problem.rows.size());
  for (std::size_t r = 0; r < problem.rows.size(); ++r) {
    const auto& row = problem.rows[r];
    switch (row.kind) {
      case RowKind::kFrequency:
        y[r] = cert.alpha;
        break;
      case RowKind::kUnion: {
        const int ps = popcount(row.first);
        const int pt = popcount(row.second);
        const int pu = popcount(row.first | row.second);
        if (ps + pt == 3 && ps * pt == 2 && pu == 3) {
          y[r] = cert.beta;
        } else if (ps == 2 && pt == 2 && pu == 4) {
          y[r] = cert.gamma;
        }
        break;
      }
      case RowKind::kBox:
        if (row.first == 0) y[r] = 1;
        break;
    }
  }
  return y;
}

Rational check_primal_feasible(const LpProblem& problem, const std::vector<Rational>& x) {
  if (x.size() != problem.variables) throw LpError("primal vector has wrong length");
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0) throw LpError("negative primal value at variable " + std::to_string(j));
  }
  for (std::size_t r = 0; r < problem.rows.size(); ++r) {
    Rational lhs;
    for (const auto& [var, coef] : problem.rows[r].coefficients) lhs += coef * x[var];
    if (lhs > problem.rows[r].rhs) throw LpError("primal violates row " + std::to_string(r));
  }
  Rational value;
  for (std::size_t j = 0; j < x.size(); ++j) value += problem.objective[j] * x[j];
  return value;
}

// ---------------------------------------------------------------------------

void write_problem(std::ostream& os, const LpProblem& p) {
  os << "lp " << p.n << ' ' << p.a << ' ' << p.variables << '\n';
  os << "objective";
  for (std::size_t j = 0; j < p.variables; ++j) {
    if (p.objective[j] != 0) os << ' ' << j << ':' << to_string(p.objective[j]);
  }
  os << '\n';
  for (const auto& row : p.rows) {
    os << to_string(row.kind);
    if (row.kind == RowKind::kUnion) {
      os << ' ' << row.first << ' ' << row.second;
    } else {
      os << ' ' << row.first;
    }
    os << ' ' << to_string(row.rhs);
    for (const auto& [var, coef] : row.coefficients) os << ' ' << var << ':' << to_string(coef);
    os << '\n';
  }
}

namespace {

std::pair<std::uint32_t, Rational> parse_entry(const std::string& token) {
  const auto colon = token.find(':');
  if (colon == std::string::npos) throw LpError("bad entry '" + token + "'");
  return {static_cast<std::uint32_t>(std::stoul(token.substr(0, colon))), parse_rational(token.substr(colon + 1))};
}

}  // namespace

LpProblem read_problem(std::istream& is) {
  LpProblem p;
  std::string line;
  if (!std::getline(is, line)) throw LpError("empty problem stream");
  {
    std::istringstream head(line);
    std::string tag;
    if (!(head >> tag >> p.n >> p.a >> p.variables) || tag != "lp") throw LpError("bad header '" + line + "'");
  }
  p.objective.assign(p.variables, Rational(0));
  bool have_objective = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    std::string token;
    if (kind == "objective") {
      while (in >> token) {
        auto [var, coef] = parse_entry(token);
        if (var >= p.variables) throw LpError("objective references unknown variable");
        p.objective[var] = coef;
      }
      have_objective = true;
      continue;
    }
    LpRow row;
    if (kind == "union") {
      row.kind = RowKind::kUnion;
      in >> row.first >> row.second;
    } else if (kind == "frequency") {
      row.kind = RowKind::kFrequency;
      in >> row.first;
    } else if (kind == "box") {
      row.kind = RowKind::kBox;
      in >> row.first;
    } else {
      throw LpError("unknown row kind '" + kind + "'");
    }
    if (!(in >> token)) throw LpError("row without rhs");
    row.rhs = parse_rational(token);
    while (in >> token) {
      auto entry = parse_entry(token);
      if (entry.first >= p.variables) throw LpError("row references unknown variable");
      row.coefficients.push_back(std::move(entry));
    }
    p.rows.push_back(std::move(row));
  }
  if (!have_objective) throw LpError("missing objective line");
  return p;
}

nlohmann::json to_json(const LpProblem& problem, const LpSolution& s) {
  nlohmann::json j = {{"n", problem.n},
                      {"a", problem.a},
                      {"status", to_string(s.status)},
                      {"rows", problem.rows.size()},
                      {"variables", problem.variables},
                      {"pivots", s.pivots}};
  if (!s.primal.empty()) {
    j["objective"] = to_string(s.objective);
    j["floor"] = floor(s.objective).get_str();
    nlohmann::json primal = nlohmann::json::array();
    for (const auto& v : s.primal) primal.push_back(to_string(v));
    j["primal"] = primal;
    nlohmann::json dual = nlohmann::json::array();
    for (std::size_t r = 0; r < s.dual.size(); ++r) {
      if (s.dual[r] == 0) continue;
      const auto& row = problem.rows[r];
      nlohmann::json entry = {{"row", r}, {"kind", to_string(row.kind)}, {"value", to_string(s.dual[r])}};
      if (row.kind == RowKind::kUnion) {
        entry["sets"] = {row.first, row.second};
      } else if (row.kind == RowKind::kFrequency) {
        entry["element"] = row.first;
      } else {
        entry["set"] = row.first;
      }
      dual.push_back(entry);
    }
    j["dual"] = dual;
  }
  return j;
}

}  // namespace frankl
