#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "frankl/rational.hpp"

namespace frankl {

class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multipliers of the cardinality-symmetric dual combination for ground
/// size n:
///   alpha on every frequency row  sum_{S ∋ e} x_S <= a,
///   beta  on every union row with |S|=1, |T|=2, |S∪T|=3,
///   gamma on every union row with |S|=2, |T|=2, |S∪T|=4,
///   1     on the box row x_∅ <= 1.
/// coefficients[k] is the resulting multiplier of x_S for every |S| = k.
struct DualCertificate {
  int n = 0;
  Rational alpha;
  Rational beta;
  Rational gamma;
  std::vector<Rational> coefficients;
};

/// Throws CertificateError for n <= 4, where C(n-2, 2) = 0.
DualCertificate make_certificate(int n);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  /// Exact distance from the target: c - 1 for coefficient checks, the
  /// value itself for sign checks, lhs - rhs for closed-form agreement.
  Rational slack;
};

struct CertificateReport {
  int n = 0;
  std::vector<CertificateCheck> checks;
  bool all_passed() const;
};

/// Exact checks: c_0..c_3 equal 1, c_4 >= 1, c_k >= 1 for 5 <= k <= n,
/// gamma >= 0, and the closed forms of alpha, beta, gamma agree with the
/// defining expressions.
CertificateReport verify_certificate(const DualCertificate& cert);

/// n*a*alpha + 3*C(n,3)*beta + 3*C(n,4)*gamma + 1. Requires n >= 7, a >= 1.
Rational bar_f(int n, long a);
/// (5a^4 - 12a^3 + 31a^2 - 24a + 48) / (12(a^2 - 3a + 4)). Requires a >= 7.
Rational bar_f_diag(long a);

struct BoundRow {
  long a = 0;
  Integer floor_value;
  Rational exact;
};

/// One row per a in [a_from, a_to] with floor(bar_f_diag(a)).
std::vector<BoundRow> bound_table(long a_from, long a_to);

/// Remarks attached to a bound table, currently the a = 9 row where a
/// quoted value of 36 disagrees with the exact floor 37.
std::vector<std::string> bound_table_notes(const std::vector<BoundRow>& rows);

}  // namespace frankl
