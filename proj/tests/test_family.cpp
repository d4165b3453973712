#include <doctest.h>

#include <random>

#include "frankl/family.hpp"
#include "frankl/search.hpp"
#include "oracles.hpp"

using namespace frankl;

TEST_CASE("construction sorts, dedupes and validates") {
  SetFamily f(3, {7, 1, 1, 0});
  CHECK(oracle::masks_of(f) == std::vector<std::uint32_t>{0, 1, 7});
  CHECK(f.contains(7));
  CHECK_FALSE(f.contains(2));
  CHECK_THROWS_AS(SetFamily(0), FamilyError);
  CHECK_THROWS_AS(SetFamily(17), FamilyError);
  CHECK_THROWS_AS(SetFamily(2, {4}), FamilyError);
  CHECK(SetFamily(16, {0xffff}).size() == 1);
}

TEST_CASE("from_elements uses 1-based elements") {
  auto f = SetFamily::from_elements(3, {{}, {1}, {2, 3}});
  CHECK(oracle::masks_of(f) == std::vector<std::uint32_t>{0, 1, 6});
  CHECK_THROWS_AS(SetFamily::from_elements(3, {{4}}), FamilyError);
  CHECK_THROWS_AS(SetFamily::from_elements(3, {{0}}), FamilyError);
}

TEST_CASE("union-closed families on [2] and [3] match brute force counts") {
  for (int n : {1, 2, 3}) {
    std::size_t expected = 0, got = 0;
    const std::uint64_t words = std::uint64_t{1} << (1u << n);
    for (std::uint64_t w = 0; w < words; ++w) {
      auto sets = oracle::from_word(n, w);
      const bool ref = oracle::union_closed(sets);
      std::vector<SubsetMask> masks(sets.begin(), sets.end());
      CHECK(is_union_closed(SetFamily(n, masks)) == ref);
      expected += ref;
    }
    for_each_union_closed(n, [&](const SetFamily&) { ++got; });
    CHECK(got == expected);
    if (n == 2) CHECK(got == 14);
  }
}

TEST_CASE("closure agrees with the fixed-point oracle and is idempotent") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<SubsetMask> masks;
    const int k = static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) masks.push_back(static_cast<SubsetMask>(rng() % power_set_size(n)));
    SetFamily f(n, masks);
    SetFamily c = union_closure(f);
    CHECK(oracle::masks_of(c) == oracle::closure(oracle::masks_of(f)));
    CHECK(is_union_closed(c));
    CHECK(union_closure(c) == c);
  }
}

TEST_CASE("frequencies sum to the total member size") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<SubsetMask> masks;
    for (int i = 0; i < 20; ++i) masks.push_back(static_cast<SubsetMask>(rng() % power_set_size(n)));
    SetFamily f(n, masks);
    std::size_t total = 0, sum = 0;
    for (auto s : f.masks()) total += popcount(s);
    for (auto c : frequencies(f).counts) sum += c;
    CHECK(sum == total);
  }
}

TEST_CASE("max frequency breaks ties toward the smallest element") {
  auto f = SetFamily::from_elements(3, {{1, 2}, {3}, {2, 3}});
  auto m = max_frequency(f);
  CHECK(m.element == 2);
  CHECK(m.count == 2);
  CHECK(max_frequency(SetFamily(3)).count == 0);
}

TEST_CASE("complement is an involution and partitions the power set") {
  auto f = SetFamily::from_elements(3, {{}, {1}, {1, 2, 3}});
  auto c = complement(f);
  CHECK(c.size() + f.size() == 8);
  CHECK(complement(c) == f);
  for (auto s : c.masks()) CHECK_FALSE(f.contains(s));
}

TEST_CASE("frankl witness") {
  CHECK_THROWS_AS(frankl_witness(SetFamily(2)), FamilyError);
  CHECK_FALSE(frankl_witness(SetFamily(2, {0})).has_value());
  // {1},{2},{1,2}: both elements appear twice out of three.
  CHECK(frankl_witness(SetFamily(2, {1, 2, 3})) == 1);
  // Element 3 appears in 2 of 4, element 1 in 1 of 4.
  CHECK(frankl_witness(SetFamily::from_elements(3, {{}, {1}, {3}, {2, 3}})) == 3);
}

TEST_CASE("removing a minimal member keeps a union-closed family closed") {
  for (const auto& f : enumerate_union_closed(3)) {
    for (auto s : minimal_members(f)) {
      auto rest = without(f, s);
      CHECK(rest.size() + 1 == f.size());
      CHECK(is_union_closed(rest));
    }
  }
  CHECK(minimal_members(SetFamily(3, {1, 2, 3, 4})) == std::vector<SubsetMask>{1, 2, 4});
}

TEST_CASE("formatting and json round trip") {
  auto f = SetFamily::from_elements(3, {{}, {1, 3}});
  CHECK(format_set(0) == "{}");
  CHECK(format_set(5) == "{1,3}");
  CHECK(format_family(f) == "{{}, {1,3}}");
  CHECK(mask_elements(6) == std::vector<int>{2, 3});
  CHECK(family_from_json(to_json(f)) == f);
  auto j = nlohmann::json::parse(R"({"n":3,"sets":[[1,3],[]]})");
  CHECK(family_from_json(j) == f);
  CHECK_THROWS(family_from_json(nlohmann::json::parse(R"({"n":2,"masks":[9]})")));
}
