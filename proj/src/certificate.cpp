#include "frankl/certificate.hpp"

namespace frankl {

namespace {

CertificateCheck equals_one(std::string name, const Rational& c) {
  Rational slack = c - 1;
  return {std::move(name), slack == 0, slack};
}

CertificateCheck at_least_one(std::string name, const Rational& c) {
  Rational slack = c - 1;
  return {std::move(name), slack >= 0, slack};
}

CertificateCheck agrees(std::string name, const Rational& lhs, const Rational& rhs) {
  Rational diff = lhs - rhs;
  return {std::move(name), diff == 0, diff};
}

}  // namespace

DualCertificate make_certificate(int n) {
  if (n <= 4) {
    throw CertificateError("certificate needs n >= 5, got " + std::to_string(n));
  }
  const Rational pairs_rest(binomial(n - 1, 2));   // C(n-1, 2)
  const Rational pairs_other(binomial(n - 2, 2));  // C(n-2, 2)
  const Rational denom = 3 + 3 * pairs_rest;

  DualCertificate cert;
  cert.n = n;
  cert.alpha = 1 - 2 * pairs_rest / denom;
  cert.beta = 2 / denom;
  const Rational m(n - 2);
  cert.gamma = (-1 + 2 * m * m / denom) / pairs_other;

  cert.coefficients.resize(n + 1);
  cert.coefficients[0] = 1;
  cert.coefficients[1] = cert.alpha + pairs_rest * cert.beta;
  cert.coefficients[2] = 2 * cert.alpha + m * cert.beta + pairs_other * cert.gamma;
  cert.coefficients[3] = 3 * cert.alpha - 3 * cert.beta;
  cert.coefficients[4] = 4 * cert.alpha - 3 * cert.gamma;
  // A k-set with k >= 5 meets k frequency rows and no union row of the
  // combination.
  for (int k = 5; k <= n; ++k) cert.coefficients[k] = k * cert.alpha;
  return cert;
}

bool CertificateReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

CertificateReport verify_certificate(const DualCertificate& cert) {
  CertificateReport report{cert.n, {}};
  auto& checks = report.checks;
  const auto& c = cert.coefficients;
  const long n = cert.n;

  const Rational quad(3 * n * n - 9 * n + 12);
  checks.push_back(agrees("alpha-closed-form", cert.alpha, Rational(n * n - 3 * n + 8) / quad));
  checks.push_back(agrees("beta-closed-form", cert.beta, Rational(4) / quad));
  // 3 + 3*C(n-1,2) = (3n^2 - 9n + 12)/2, so gamma = (n^2 - 7n + 4) / ((3n^2 - 9n + 12) C(n-2,2)).
  checks.push_back(agrees("gamma-closed-form", cert.gamma,
                          Rational(n * n - 7 * n + 4) / (quad * Rational(binomial(n - 2, 2)))));

  checks.push_back(equals_one("c0", c[0]));
  checks.push_back(equals_one("c1", c[1]));
  checks.push_back(equals_one("c2", c[2]));
  checks.push_back(equals_one("c3", c[3]));
  checks.push_back(at_least_one("c4", c[4]));
  for (int k = 5; k <= cert.n; ++k) {
    checks.push_back(at_least_one("c" + std::to_string(k), c[k]));
  }
  checks.push_back({"gamma-nonnegative", cert.gamma >= 0, cert.gamma});
  return report;
}

Rational bar_f(int n, long a) {
  if (n < 7) throw CertificateError("bar_f needs n >= 7, got " + std::to_string(n));
  if (a < 1) throw CertificateError("bar_f needs a >= 1, got " + std::to_string(a));
  const auto cert = make_certificate(n);
  return Rational(n) * a * cert.alpha + 3 * Rational(binomial(n, 3)) * cert.beta +
         3 * Rational(binomial(n, 4)) * cert.gamma + 1;
}

Rational bar_f_diag(long a) {
  if (a < 7) throw CertificateError("bar_f_diag needs a >= 7, got " + std::to_string(a));
  const Integer x(a);
  const Integer num = 5 * x * x * x * x - 12 * x * x * x + 31 * x * x - 24 * x + 48;
  const Integer den = 12 * (x * x - 3 * x + 4);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::vector<BoundRow> bound_table(long a_from, long a_to) {
  if (a_from < 7 || a_to < a_from) {
    throw CertificateError("bound table needs 7 <= a_from <= a_to");
  }
  std::vector<BoundRow> rows;
  for (long a = a_from; a <= a_to; ++a) {
    Rational v = bar_f_diag(a);
    rows.push_back({a, floor(v), v});
  }
  return rows;
}

std::vector<std::string> bound_table_notes(const std::vector<BoundRow>& rows) {
  std::vector<std::string> notes;
  for (const auto& r : rows) {
    if (r.a == 9) {
      notes.push_back("a=9: exact value " + to_string(r.exact) + ", floor " + r.floor_value.get_str() +
                      "; a value of 36 quoted in prose for floor(bar_f(9,9)) disagrees with the "
                      "closed form, the table value 37 is the exact one");
    }
  }
  return notes;
}

}  // namespace frankl
