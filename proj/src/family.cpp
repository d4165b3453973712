#include "frankl/family.hpp"

#include <algorithm>
#include <sstream>

namespace frankl {

namespace {

void check_ground(int n) {
  if (n < 1 || n > kMaxGround) {
    throw FamilyError("ground size must be in [1, 16], got " + std::to_string(n));
  }
}

std::vector<std::uint8_t> membership_table(const SetFamily& family) {
  std::vector<std::uint8_t> in(power_set_size(family.n()), 0);
  for (SubsetMask s : family.masks()) in[s] = 1;
  return in;
}

}  // namespace

SetFamily::SetFamily(int n) : n_(n) { check_ground(n); }

SetFamily::SetFamily(int n, std::vector<SubsetMask> masks) : n_(n), masks_(std::move(masks)) {
  check_ground(n);
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  if (!masks_.empty() && masks_.back() > full_mask(n)) {
    throw FamilyError("mask " + std::to_string(masks_.back()) + " outside ground set of size " +
                      std::to_string(n));
  }
}

SetFamily SetFamily::power_set(int n) {
  check_ground(n);
  std::vector<SubsetMask> all(power_set_size(n));
  for (std::uint32_t s = 0; s < all.size(); ++s) all[s] = static_cast<SubsetMask>(s);
  return SetFamily(n, std::move(all));
}

SetFamily SetFamily::from_elements(int n, const std::vector<std::vector<int>>& sets) {
  check_ground(n);
  std::vector<SubsetMask> masks;
  masks.reserve(sets.size());
  for (const auto& set : sets) {
    std::uint32_t m = 0;
    for (int e : set) {
      if (e < 1 || e > n) {
        throw FamilyError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
      }
      m |= 1u << (e - 1);
    }
    masks.push_back(static_cast<SubsetMask>(m));
  }
  return SetFamily(n, std::move(masks));
}

bool SetFamily::contains(std::uint32_t mask) const {
  return mask <= 0xFFFF && std::binary_search(masks_.begin(), masks_.end(), static_cast<SubsetMask>(mask));
}

bool is_union_closed(const SetFamily& family) {
  const auto in = membership_table(family);
  const auto masks = family.masks();
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (!in[masks[i] | masks[j]]) return false;
    }
  }
  return true;
}

// U belongs to the closure iff U is the union of the members contained in
// it. The subset-OR table is filled by the standard sum-over-subsets sweep.
SetFamily union_closure(const SetFamily& family) {
  const int n = family.n();
  const std::uint32_t size = power_set_size(n);
  std::vector<SubsetMask> below(size, 0);
  std::vector<std::uint8_t> any(size, 0);
  for (SubsetMask s : family.masks()) {
    below[s] = s;
    any[s] = 1;
  }
  for (int bit = 0; bit < n; ++bit) {
    const std::uint32_t b = 1u << bit;
    for (std::uint32_t u = 0; u < size; ++u) {
      if (u & b) {
        below[u] |= below[u ^ b];
        any[u] |= any[u ^ b];
      }
    }
  }
  std::vector<SubsetMask> out;
  for (std::uint32_t u = 0; u < size; ++u) {
    if (any[u] && below[u] == u) out.push_back(static_cast<SubsetMask>(u));
  }
  return SetFamily(n, std::move(out));
}

FrequencyVector frequencies(const SetFamily& family) {
  FrequencyVector f{std::vector<std::size_t>(family.n(), 0)};
  for (SubsetMask s : family.masks()) {
    for (int e = 0; e < family.n(); ++e) {
      if (s >> e & 1u) ++f.counts[e];
    }
  }
  return f;
}

MaxFrequency max_frequency(const SetFamily& family) {
  const auto f = frequencies(family);
  MaxFrequency best{1, 0};
  for (int e = 0; e < family.n(); ++e) {
    if (f.counts[e] > best.count) best = {e + 1, f.counts[e]};
  }
  return best;
}

SetFamily complement(const SetFamily& family) {
  const auto in = membership_table(family);
  std::vector<SubsetMask> out;
  for (std::uint32_t s = 0; s < in.size(); ++s) {
    if (!in[s]) out.push_back(static_cast<SubsetMask>(s));
  }
  return SetFamily(family.n(), std::move(out));
}

std::optional<int> frankl_witness(const SetFamily& family) {
  if (family.empty()) {
    throw FamilyError("the witness is defined for nonempty families only");
  }
  const auto f = frequencies(family);
  for (int e = 0; e < family.n(); ++e) {
    if (2 * f.counts[e] >= family.size()) return e + 1;
  }
  return std::nullopt;
}

SetFamily without(const SetFamily& family, SubsetMask mask) {
  std::vector<SubsetMask> rest;
  rest.reserve(family.size());
  for (SubsetMask s : family.masks()) {
    if (s != mask) rest.push_back(s);
  }
  return SetFamily(family.n(), std::move(rest));
}

std::vector<SubsetMask> minimal_members(const SetFamily& family) {
  std::vector<SubsetMask> out;
  const auto masks = family.masks();
  for (SubsetMask s : masks) {
    const bool minimal = std::none_of(masks.begin(), masks.end(), [s](SubsetMask t) {
      return t != s && (t & s) == t;
    });
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<int> mask_elements(std::uint32_t mask) {
  std::vector<int> out;
  for (int e = 0; mask >> e; ++e) {
    if (mask >> e & 1u) out.push_back(e + 1);
  }
  return out;
}

std::string format_set(std::uint32_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : mask_elements(mask)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string format_family(const SetFamily& family) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (SubsetMask s : family.masks()) {
    if (!first) os << ", ";
    os << format_set(s);
    first = false;
  }
  os << '}';
  return os.str();
}

nlohmann::json to_json(const SetFamily& family) {
  nlohmann::json masks = nlohmann::json::array();
  for (SubsetMask s : family.masks()) masks.push_back(s);
  return {{"n", family.n()}, {"masks", masks}};
}

SetFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw FamilyError("family JSON needs an integer \"n\"");
  }
  const int n = j["n"].get<int>();
  if (j.contains("masks")) {
    std::vector<SubsetMask> masks;
    for (const auto& m : j["masks"]) {
      if (!m.is_number_unsigned() || m.get<std::uint64_t>() > 0xFFFF) {
        throw FamilyError("invalid mask in family JSON");
      }
      masks.push_back(static_cast<SubsetMask>(m.get<std::uint64_t>()));
    }
    return SetFamily(n, std::move(masks));
  }
  if (j.contains("sets")) {
    return SetFamily::from_elements(n, j["sets"].get<std::vector<std::vector<int>>>());
  }
  throw FamilyError("family JSON needs \"masks\" or \"sets\"");
}

}  // namespace frankl
