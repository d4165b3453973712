#pragma once

#include <string>

#include <gmpxx.h>

namespace frankl {

/// Exact rational backed by GMP. Arithmetic results are canonical; values
/// built from a numerator/denominator pair are not until canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or just "p" when q == 1.
std::string to_string(const Rational& q);
/// Parses "p", "p/q" or "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

Integer floor(const Rational& q);
Integer binomial(long n, long k);

}  // namespace frankl
