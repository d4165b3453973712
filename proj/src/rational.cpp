#include "frankl/rational.hpp"

#include <stdexcept>

namespace frankl {

std::string to_string(const Rational& value) {
  // Two-argument construction does not reduce.
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace frankl
