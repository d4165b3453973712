#include <doctest.h>

#include <cstdlib>

#include "frankl/search.hpp"
#include "oracles.hpp"

using namespace frankl;

namespace {

void check_f_witness(const FResult& r) {
  CHECK(r.witness.n() == r.n);
  CHECK(r.witness.size() == r.value);
  CHECK(is_union_closed(r.witness));
  if (!r.witness.empty()) CHECK(static_cast<long>(max_frequency(r.witness).count) <= r.a);
}

void check_g_witness(const GResult& r) {
  CHECK(r.witness.size() == r.m);
  CHECK(is_union_closed(r.witness));
  CHECK(max_frequency(r.witness).count == r.value);
}

}  // namespace

TEST_CASE("f matches the brute-force oracle for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (long a = 0; a <= (1L << n); ++a) {
      auto r = compute_f(n, a);
      CHECK_MESSAGE(r.value == oracle::f(n, a), "n=" << n << " a=" << a);
      CHECK(r.proven_optimal);
      check_f_witness(r);
    }
  }
}

TEST_CASE("f(a,a) for small a") {
  CHECK(compute_f(1, 1).value == 2);
  CHECK(compute_f(2, 2).value == 4);
  CHECK(compute_f(3, 3).value == 5);
  CHECK(compute_f(4, 4).value == 8);
  CHECK(compute_f(1, 0).value == 1);
}

TEST_CASE("branch-and-bound agrees with enumeration for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (long a = 0; a <= (1L << n); ++a) {
      auto e = compute_f(n, a);
      auto b = compute_f_branch_and_bound(n, a);
      CHECK_MESSAGE(e.value == b.value, "n=" << n << " a=" << a);
      CHECK(b.proven_optimal);
      check_f_witness(b);
    }
  }
}

TEST_CASE("branch-and-bound at n = 5") {
  const std::size_t expected[] = {2, 4, 5, 8, 9};
  for (long a = 1; a <= 5; ++a) {
    auto r = compute_f(5, a);
    CHECK(r.value == expected[a - 1]);
    CHECK(r.proven_optimal);
    check_f_witness(r);
  }
  // Monotone in a, capped by 2^n.
  CHECK(compute_f(5, 16).value == 32);
}

TEST_CASE("budget exhaustion keeps a valid witness and reports a lower bound") {
  SearchBudget budget;
  budget.max_nodes = 5;
  auto r = compute_f(6, 6, budget);
  CHECK_FALSE(r.proven_optimal);
  CHECK(r.value <= 10);
  check_f_witness(r);
  SearchBudget bad;
  bad.max_seconds = -1.0;
  CHECK_THROWS_AS(compute_f(5, 3, bad), SearchError);
}

TEST_CASE("f rejects bad arguments") {
  CHECK_THROWS_AS(compute_f(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(compute_f(17, 1), std::invalid_argument);
  CHECK_THROWS_AS(compute_f(3, -1), std::invalid_argument);
}

TEST_CASE("branch-and-bound is independent of the thread count") {
  std::vector<nlohmann::json> runs;
  for (const char* t : {"1", "3", "8"}) {
    setenv("FRANKL_LAB_THREADS", t, 1);
    CHECK(search_threads() == static_cast<unsigned>(std::atoi(t)));
    for (long a : {4L, 6L}) runs.push_back(to_json(compute_f(6, a), false));
  }
  unsetenv("FRANKL_LAB_THREADS");
  CHECK(runs[0] == runs[2]);
  CHECK(runs[0] == runs[4]);
  CHECK(runs[1] == runs[3]);
  CHECK(runs[1] == runs[5]);
  CHECK(runs[1]["value"] == 10);
}

TEST_CASE("g matches the brute-force oracle for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= (1u << n); ++m) {
      auto r = compute_g(n, m);
      CHECK_MESSAGE(r.value == oracle::g(n, m), "n=" << n << " m=" << m);
      check_g_witness(r);
    }
  }
  CHECK_THROWS_AS(compute_g(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(compute_g(3, 9), std::invalid_argument);
}

TEST_CASE("g by complements agrees with enumeration at n = 4") {
  for (std::size_t m = 12; m <= 16; ++m) {
    auto c = compute_g_by_complements(4, m);
    auto e = compute_g(4, m);
    CHECK(c.value == e.value);
    CHECK(c.value == oracle::g(4, m));
    check_g_witness(c);
  }
  CHECK_THROWS_AS(compute_g_by_complements(4, 11), std::invalid_argument);
}

TEST_CASE("g at n = 5 by decision search") {
  // 2^(n-1) once at most n-1 sets are missing; below that the decision
  // search kicks in.
  for (std::size_t m = 28; m <= 32; ++m) CHECK(compute_g(5, m).value == 16);
  auto r = compute_g(5, 9);
  CHECK(r.value == 5);
  CHECK(r.proven_optimal);
  check_g_witness(r);
}

TEST_CASE("f/g duality on n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    auto d = check_fg_duality(n, 1L << n);
    CHECK(d.violations.empty());
    CHECK(d.f_values.size() == (1u << n));
    CHECK(d.g_values.size() == (1u << n));
  }
  CHECK_THROWS_AS(check_fg_duality(5, 3), std::invalid_argument);
}

TEST_CASE("enumeration order and size") {
  auto all = enumerate_union_closed(2);
  REQUIRE(all.size() == 14);
  CHECK(all.front().empty());
  CHECK(all.back() == SetFamily::power_set(2));
  CHECK_THROWS_AS(enumerate_union_closed(5), std::invalid_argument);
}

TEST_CASE("random union-closed families are seeded and closed") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto f = random_union_closed(6, seed, Rational(1, 8));
    CHECK(is_union_closed(f));
    CHECK(f == random_union_closed(6, seed, Rational(1, 8)));
  }
  CHECK(random_union_closed(5, 3, Rational(0)).empty());
  CHECK(random_union_closed(5, 3, Rational(1)) == SetFamily::power_set(5));
  CHECK_THROWS_AS(random_union_closed(5, 3, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(random_union_closed(5, 3, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("json output") {
  auto j = to_json(compute_f(3, 3));
  CHECK(j["value"] == 5);
  CHECK(j["proven_optimal"] == true);
  CHECK(j.contains("nodes"));
  CHECK_FALSE(to_json(compute_f(3, 3), false).contains("seconds"));
  CHECK(family_from_json(j["witness"]).size() == 5);
}

TEST_CASE("equal densities give equal families however they are written") {
  Rational unreduced(2, 32);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(random_union_closed(5, seed, unreduced) == random_union_closed(5, seed, Rational(1, 16)));
}
