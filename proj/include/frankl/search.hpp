#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "frankl/family.hpp"
#include "frankl/rational.hpp"

namespace frankl {

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Limits on a search or simplex run; an absent field means unlimited.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;

  static SearchBudget unlimited() { return {}; }
  /// Throws SearchError if a present limit is not positive.
  void validate() const;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Candidate for f(n,a). When proven_optimal is false the budget ran out
/// and value is only a lower bound certified by the witness.
struct FResult {
  int n = 0;
  long a = 0;
  std::size_t value = 0;
  SetFamily witness;
  bool proven_optimal = false;
  SearchStats stats;
};

/// Candidate for g(n,m). When proven_optimal is false value is an upper
/// bound certified by the witness.
struct GResult {
  int n = 0;
  std::size_t m = 0;
  std::size_t value = 0;
  SetFamily witness;
  bool proven_optimal = false;
  SearchStats stats;
};

/// Largest union-closed family on [n] with every element in at most a
/// sets. n <= 4 runs the full enumeration of all 2^(2^n) subfamilies;
/// larger n runs branch-and-bound. a = 0 is accepted (only ∅ fits).
FResult compute_f(int n, long a, const SearchBudget& budget = {});

/// Branch-and-bound path only, also for n <= 4. Exposed so it can be
/// checked against the enumeration.
FResult compute_f_branch_and_bound(int n, long a, const SearchBudget& budget = {},
                                   std::optional<std::size_t> stop_at = std::nullopt);

/// Smallest possible top frequency over union-closed families of exactly m
/// sets on [n].
GResult compute_g(int n, std::size_t m, const SearchBudget& budget = {});

/// g through complements: every choice of 2^n - m missing masks whose
/// complement is union-closed. Requires 2^n - m <= n.
GResult compute_g_by_complements(int n, std::size_t m, const SearchBudget& budget = {});

/// Every union-closed subfamily of 2^[n], in increasing order of the
/// 2^n-bit membership word. Rejects n > 4.
std::vector<SetFamily> enumerate_union_closed(int n);
void for_each_union_closed(int n, const std::function<void(const SetFamily&)>& visit);

/// Deterministic in (n, seed, density). Each mask is kept when the next
/// draw of std::mt19937_64(seed), reduced mod den(density), is below
/// num(density); the result is then closed under union. Draws happen in
/// increasing mask order. This scheme is frozen as "mt64-mod-v1".
SetFamily random_union_closed(int n, std::uint64_t seed, const Rational& density);

struct DualityViolation {
  long a = 0;
  std::size_t m = 0;
  std::size_t f_value = 0;
  std::size_t g_value = 0;
};

struct DualityReport {
  int n = 0;
  long a_max = 0;
  std::vector<std::size_t> f_values;  // index a-1
  std::vector<std::size_t> g_values;  // index m-1
  std::vector<DualityViolation> violations;
};

/// Checks f(n,a) >= m  <=>  g(n,m) <= a over 1 <= a <= a_max, 1 <= m <= 2^n.
/// Requires n <= 4.
DualityReport check_fg_duality(int n, long a_max);

/// Worker threads for branch-and-bound: FRANKL_LAB_THREADS if set and
/// positive, else the hardware concurrency.
unsigned search_threads();

nlohmann::json to_json(const FResult& r, bool with_stats = true);
nlohmann::json to_json(const GResult& r, bool with_stats = true);

}  // namespace frankl
