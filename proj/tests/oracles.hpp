#pragma once

// Slow, obviously-correct reference implementations. Nothing here calls
// into the library beyond the SetFamily container.

#include <cstdint>
#include <vector>

#include "frankl/family.hpp"

namespace oracle {

// Repeated pairwise unions until nothing new appears.
std::vector<std::uint32_t> closure(std::vector<std::uint32_t> sets);
bool union_closed(const std::vector<std::uint32_t>& sets);
// Subfamily of 2^[n] selected by the bits of `word`.
std::vector<std::uint32_t> from_word(int n, std::uint64_t word);
std::size_t max_degree(int n, const std::vector<std::uint32_t>& sets);
// Brute force over every subfamily; n <= 4.
std::size_t f(int n, long a);
std::size_t g(int n, std::size_t m);
// Pairs S < T with neither containing the other.
std::size_t incomparable_pairs(int n);

std::vector<std::uint32_t> masks_of(const frankl::SetFamily& family);

}  // namespace oracle
