#include <doctest.h>

#include "frankl/certificate.hpp"
#include "frankl/rational.hpp"

using namespace frankl;

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(floor(Rational(387, 16)) == 24);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  Rational raw(6, 4);
  raw.canonicalize();
  CHECK(raw == Rational(3, 2));
}

TEST_CASE("certificate at n = 7 has the hand-computed multipliers") {
  auto c = make_certificate(7);
  CHECK(c.alpha == Rational(3, 8));
  CHECK(c.beta == Rational(1, 24));
  CHECK(c.gamma == Rational(1, 240));
  REQUIRE(c.coefficients.size() == 8);
  for (int k = 0; k <= 3; ++k) CHECK(c.coefficients[k] == 1);
  CHECK(c.coefficients[4] - 1 == Rational(39, 80));
  for (int k = 5; k <= 7; ++k) CHECK(c.coefficients[k] == k * c.alpha);
  CHECK(verify_certificate(c).all_passed());
}

TEST_CASE("defining expressions for the multipliers, recomputed independently") {
  for (int n = 5; n <= 60; ++n) {
    const Rational C = binomial(n - 1, 2);
    const Rational D = binomial(n - 2, 2);
    const Rational denom = 3 + 3 * C;
    auto c = make_certificate(n);
    CHECK(c.alpha == 1 - 2 * C / denom);
    CHECK(c.beta == 2 / denom);
    CHECK(c.gamma == (-1 + 2 * Rational((n - 2) * (n - 2)) / denom) / D);
  }
}

TEST_CASE("certificate checks pass for 7 <= n <= 200") {
  for (int n = 7; n <= 200; ++n) {
    auto r = verify_certificate(make_certificate(n));
    CHECK_MESSAGE(r.all_passed(), "n=" << n);
    CHECK(r.n == n);
  }
}

TEST_CASE("certificate flags a negative gamma at small n") {
  // n^2 - 7n + 4 < 0 for n = 5, 6.
  for (int n : {5, 6}) {
    auto r = verify_certificate(make_certificate(n));
    CHECK_FALSE(r.all_passed());
  }
  CHECK_THROWS_AS(make_certificate(4), CertificateError);
}

TEST_CASE("a tampered certificate fails its checks") {
  auto c = make_certificate(9);
  c.coefficients[2] += Rational(1, 100);
  CHECK_FALSE(verify_certificate(c).all_passed());
}

TEST_CASE("bound formulas") {
  CHECK(bar_f(7, 7) == Rational(387, 16));
  CHECK(bar_f(9, 9) == Rational(1100, 29));
  for (long a = 7; a <= 200; ++a) CHECK(bar_f_diag(a) == bar_f(static_cast<int>(a), a));
  CHECK_THROWS_AS(bar_f(6, 3), CertificateError);
  CHECK_THROWS_AS(bar_f(7, 0), CertificateError);
  CHECK_THROWS_AS(bar_f_diag(6), CertificateError);
}

TEST_CASE("bound table reproduces the published floors") {
  const long expected[] = {24, 30, 37, 46, 55, 64, 75, 86, 99, 112};
  auto rows = bound_table(7, 16);
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].a == static_cast<long>(7 + i));
    CHECK(rows[i].floor_value == expected[i]);
  }
  auto notes = bound_table_notes(rows);
  REQUIRE(notes.size() == 1);
  CHECK(notes[0].rfind("a=9", 0) == 0);
  CHECK(bound_table_notes(bound_table(10, 12)).empty());
  CHECK_THROWS_AS(bound_table(6, 8), CertificateError);
  CHECK_THROWS_AS(bound_table(9, 8), CertificateError);
}
