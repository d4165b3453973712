#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace frankl {

/// Largest supported ground set. A subset of [n] fits in 16 bits and a
/// membership table over 2^n masks fits in 65536 bits.
inline constexpr int kMaxGround = 16;

/// Bit i-1 is set iff element i belongs to the subset.
using SubsetMask = std::uint16_t;

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int popcount(unsigned mask) { return __builtin_popcount(mask); }

inline std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

inline std::uint32_t power_set_size(int n) { return std::uint32_t{1} << n; }

/// Collection of distinct subsets of [n], stored as a strictly increasing
/// list of masks. The empty set is an ordinary member.
class SetFamily {
 public:
  explicit SetFamily(int n = 1);
  /// Sorts and deduplicates; throws FamilyError on n out of range or a mask
  /// outside [0, 2^n).
  SetFamily(int n, std::vector<SubsetMask> masks);

  static SetFamily power_set(int n);
  /// Builds a family from 1-based element lists, e.g. {{1}, {2, 3}}.
  static SetFamily from_elements(int n, const std::vector<std::vector<int>>& sets);

  int n() const { return n_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }
  std::span<const SubsetMask> masks() const { return masks_; }
  bool contains(std::uint32_t mask) const;

  /// Lexicographic on (n, masks).
  auto operator<=>(const SetFamily&) const = default;

 private:
  int n_;
  std::vector<SubsetMask> masks_;
};

/// counts[e] is the number of members containing element e+1.
struct FrequencyVector {
  std::vector<std::size_t> counts;
};

struct MaxFrequency {
  int element;  // 1-based
  std::size_t count;
};

bool is_union_closed(const SetFamily& family);
SetFamily union_closure(const SetFamily& family);
FrequencyVector frequencies(const SetFamily& family);
MaxFrequency max_frequency(const SetFamily& family);
SetFamily complement(const SetFamily& family);

/// An element present in at least half the members (2*count >= |F|), the
/// smallest such index. Throws FamilyError on the empty family.
std::optional<int> frankl_witness(const SetFamily& family);

/// Removes one member and returns the rest. Used with inclusion-minimal
/// members, whose removal keeps a union-closed family union-closed.
SetFamily without(const SetFamily& family, SubsetMask mask);
/// Members with no proper subset in the family, ascending.
std::vector<SubsetMask> minimal_members(const SetFamily& family);

/// Sorted 1-based elements of a mask.
std::vector<int> mask_elements(std::uint32_t mask);
std::string format_set(std::uint32_t mask);
std::string format_family(const SetFamily& family);

/// Emits the compact form {"n":..,"masks":[..]}.
nlohmann::json to_json(const SetFamily& family);
/// Accepts either {"n":..,"masks":[..]} or {"n":..,"sets":[[..],..]}.
SetFamily family_from_json(const nlohmann::json& j);

}  // namespace frankl
