#include "frankl/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>

#include "frankl/certificate.hpp"

namespace frankl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_ground(int n) {
  if (n < 1 || n > kMaxGround) {
    throw SearchError("ground size must be in [1, 16], got " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// Full enumeration for n <= 4. A family is a 2^n-bit word, bit s set iff
// mask s is a member.

struct SmallFamily {
  std::uint32_t word;
  std::uint32_t size;
  std::uint32_t top_frequency;
};

bool word_is_union_closed(std::uint32_t word, std::uint32_t masks) {
  for (std::uint32_t s = 0; s < masks; ++s) {
    if (!(word >> s & 1u)) continue;
    for (std::uint32_t t = s + 1; t < masks; ++t) {
      if ((word >> t & 1u) && !(word >> (s | t) & 1u)) return false;
    }
  }
  return true;
}

std::uint32_t word_top_frequency(std::uint32_t word, int n) {
  std::uint32_t best = 0;
  for (int e = 0; e < n; ++e) {
    std::uint32_t count = 0;
    for (std::uint32_t s = 0; s < power_set_size(n); ++s) {
      if ((word >> s & 1u) && (s >> e & 1u)) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

SetFamily family_of_word(int n, std::uint32_t word) {
  std::vector<SubsetMask> masks;
  for (std::uint32_t s = 0; s < power_set_size(n); ++s) {
    if (word >> s & 1u) masks.push_back(static_cast<SubsetMask>(s));
  }
  return SetFamily(n, std::move(masks));
}

const std::vector<SmallFamily>& closed_words(int n) {
  if (n < 1 || n > 4) {
    throw SearchError("full enumeration needs 1 <= n <= 4, got " + std::to_string(n));
  }
  static std::once_flag once[5];
  static std::vector<SmallFamily> tables[5];
  std::call_once(once[n], [n] {
    const std::uint32_t masks = power_set_size(n);
    const std::uint64_t words = std::uint64_t{1} << masks;
    for (std::uint64_t w = 0; w < words; ++w) {
      const auto word = static_cast<std::uint32_t>(w);
      if (word_is_union_closed(word, masks)) {
        tables[n].push_back({word, static_cast<std::uint32_t>(popcount(word)), word_top_frequency(word, n)});
      }
    }
  });
  return tables[n];
}

// Picks the lexicographically smallest family among equally good candidates.
void keep_smaller(std::optional<SetFamily>& best, SetFamily candidate) {
  if (!best || candidate < *best) best = std::move(candidate);
}

FResult f_by_enumeration(int n, long a) {
  const auto start = Clock::now();
  const auto& table = closed_words(n);
  std::uint32_t best_size = 0;
  for (const auto& fam : table) {
    if (fam.top_frequency <= a) best_size = std::max(best_size, fam.size);
  }
  std::optional<SetFamily> witness;
  for (const auto& fam : table) {
    if (fam.top_frequency <= a && fam.size == best_size) keep_smaller(witness, family_of_word(n, fam.word));
  }
  return {n, a, best_size, *witness, true, {table.size(), seconds_since(start)}};
}

GResult g_by_enumeration(int n, std::size_t m) {
  const auto start = Clock::now();
  const auto& table = closed_words(n);
  std::uint32_t best = UINT32_MAX;
  for (const auto& fam : table) {
    if (fam.size == m) best = std::min(best, fam.top_frequency);
  }
  std::optional<SetFamily> witness;
  for (const auto& fam : table) {
    if (fam.size == m && fam.top_frequency == best) keep_smaller(witness, family_of_word(n, fam.word));
  }
  return {n, m, best, *witness, true, {table.size(), seconds_since(start)}};
}

// ---------------------------------------------------------------------------
// Branch-and-bound for f(n,a).
//
// Masks are decided in a fixed order: descending popcount, then ascending
// value. The union of two incomparable sets is strictly larger than both,
// so it is always decided before either of them; including S is legal iff
// S|T is already in for every included T.

class BudgetClock {
 public:
  BudgetClock(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {}

  // Returns false once the budget is exhausted. Called once per node.
  bool tick() {
    const auto count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    if (budget_.max_nodes && count > *budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    if (budget_.max_seconds && (count & 1023) == 0 && seconds_since(start_) > *budget_.max_seconds) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_.load(); }
  SearchStats stats() const { return {nodes_.load(), seconds_since(start_)}; }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

struct Incumbent {
  std::mutex mutex;
  std::atomic<std::size_t> value{0};
  std::size_t subtree = SIZE_MAX;
  std::vector<SubsetMask> members;
  // Subtree that reached the cap or target; later subtrees cannot win.
  std::atomic<std::size_t> done_at{SIZE_MAX};
};

enum : std::uint8_t { kUndecided = 0, kIn = 1, kOut = 2 };

class FSearch {
 public:
  FSearch(int n, long a, std::size_t cap, std::optional<std::size_t> stop_at, Incumbent& incumbent,
          BudgetClock& clock)
      : n_(n),
        a_(a),
        cap_(cap),
        stop_at_(stop_at),
        incumbent_(incumbent),
        clock_(clock),
        status_(power_set_size(n), kUndecided),
        freq_(n, 0) {
    for (std::uint32_t s = 0; s < power_set_size(n); ++s) order_.push_back(static_cast<SubsetMask>(s));
    std::stable_sort(order_.begin(), order_.end(),
                     [](SubsetMask x, SubsetMask y) { return popcount(x) > popcount(y); });
  }

  std::size_t mask_count() const { return order_.size(); }

  bool can_include(SubsetMask s) const {
    for (int e = 0; e < n_; ++e) {
      if ((s >> e & 1u) && freq_[e] >= a_) return false;
    }
    for (SubsetMask t : included_) {
      const auto u = static_cast<SubsetMask>(s | t);
      if (u != s && status_[u] != kIn) return false;
    }
    return true;
  }

  void include(SubsetMask s) {
    status_[s] = kIn;
    included_.push_back(s);
    for (int e = 0; e < n_; ++e) freq_[e] += s >> e & 1u;
  }

  void undo_include(SubsetMask s) {
    status_[s] = kUndecided;
    included_.pop_back();
    for (int e = 0; e < n_; ++e) freq_[e] -= s >> e & 1u;
  }

  // Collects every feasible decision prefix of the given depth, in DFS
  // order (include before exclude).
  void prefixes(std::size_t depth, std::vector<std::vector<std::uint8_t>>& out) {
    std::vector<std::uint8_t> path;
    collect(0, depth, path, out);
  }

  // Replays a prefix, then searches below it.
  void run_subtree(const std::vector<std::uint8_t>& prefix, std::size_t subtree) {
    subtree_ = subtree;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] == kIn) {
        include(order_[i]);
      } else {
        status_[order_[i]] = kOut;
      }
    }
    dfs(prefix.size());
    for (std::size_t i = prefix.size(); i-- > 0;) {
      if (prefix[i] == kIn) {
        undo_include(order_[i]);
      } else {
        status_[order_[i]] = kUndecided;
      }
    }
  }

 private:
  void collect(std::size_t idx, std::size_t depth, std::vector<std::uint8_t>& path,
               std::vector<std::vector<std::uint8_t>>& out) {
    if (idx == depth || idx == order_.size()) {
      out.push_back(path);
      return;
    }
    const SubsetMask s = order_[idx];
    if (can_include(s)) {
      include(s);
      path.push_back(kIn);
      collect(idx + 1, depth, path, out);
      path.pop_back();
      undo_include(s);
    }
    status_[s] = kOut;
    path.push_back(kOut);
    collect(idx + 1, depth, path, out);
    path.pop_back();
    status_[s] = kUndecided;
  }

  // Upper bound on how many of order_[idx..] can still join. Counts the
  // individually includable masks, then caps by the remaining frequency
  // capacity taking the cheapest (smallest) masks first. A per-element cap
  // applies too: no element can gain more than a - freq[e] sets.
  std::size_t remaining_bound(std::size_t idx) const {
    std::size_t capacity = 0;
    for (int e = 0; e < n_; ++e) capacity += static_cast<std::size_t>(a_ - freq_[e]);
    std::size_t by_size[kMaxGround + 1] = {};
    std::size_t count = 0;
    for (std::size_t i = idx; i < order_.size(); ++i) {
      const SubsetMask s = order_[i];
      if (can_include(s)) {
        ++by_size[popcount(s)];
        ++count;
      }
    }
    std::size_t fit = by_size[0];
    for (int k = 1; k <= n_ && capacity > 0; ++k) {
      const std::size_t take = std::min(by_size[k], capacity / k);
      fit += take;
      capacity -= take * k;
      if (take < by_size[k]) break;
    }
    return std::min(count, fit);
  }

  bool should_prune(std::size_t bound) const {
    const std::size_t best = incumbent_.value.load(std::memory_order_relaxed);
    if (bound > best) return false;
    if (bound < best) return true;
    // Equal bound: only an earlier subtree keeps priority on ties.
    std::lock_guard lock(incumbent_.mutex);
    return incumbent_.subtree <= subtree_;
  }

  void offer() {
    const std::size_t size = included_.size();
    if (size < incumbent_.value.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(incumbent_.mutex);
    const std::size_t best = incumbent_.value.load();
    if (size > best || (size == best && subtree_ < incumbent_.subtree)) {
      incumbent_.value = size;
      incumbent_.subtree = subtree_;
      incumbent_.members = included_;
      if (size >= cap_ || (stop_at_ && size >= *stop_at_)) incumbent_.done_at = subtree_;
    }
  }

  void dfs(std::size_t idx) {
    if (incumbent_.done_at.load(std::memory_order_relaxed) <= subtree_ || !clock_.tick()) return;
    offer();
    if (idx == order_.size()) return;
    const std::size_t bound = std::min(cap_, included_.size() + remaining_bound(idx));
    if (should_prune(bound)) return;

    const SubsetMask s = order_[idx];
    if (can_include(s)) {
      include(s);
      dfs(idx + 1);
      undo_include(s);
    }
    status_[s] = kOut;
    dfs(idx + 1);
    status_[s] = kUndecided;
  }

  int n_;
  long a_;
  std::size_t cap_;
  std::optional<std::size_t> stop_at_;
  Incumbent& incumbent_;
  BudgetClock& clock_;
  std::size_t subtree_ = 0;
  std::vector<SubsetMask> order_;
  std::vector<std::uint8_t> status_;
  std::vector<long> freq_;
  std::vector<SubsetMask> included_;
};

// Upper bound on f(n,a) known without search.
std::size_t static_cap(int n, long a) {
  std::size_t cap = power_set_size(n);
  if (n >= 7 && a >= 1) {
    const Integer certified = floor(bar_f(n, a));
    if (certified < cap) cap = certified.get_ui();
  }
  return cap;
}

FResult f_branch_and_bound(int n, long a, const SearchBudget& budget, std::optional<std::size_t> stop_at) {
  BudgetClock clock(budget);
  Incumbent incumbent;
  const std::size_t cap = static_cap(n, a);

  std::vector<std::vector<std::uint8_t>> roots;
  {
    FSearch splitter(n, a, cap, stop_at, incumbent, clock);
    splitter.prefixes(std::min<std::size_t>(splitter.mask_count(), 10), roots);
  }

  const unsigned threads = std::max(1u, std::min<unsigned>(search_threads(), roots.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    FSearch search(n, a, cap, stop_at, incumbent, clock);
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      if (incumbent.done_at <= i || clock.exhausted()) break;
      search.run_subtree(roots[i], i);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  FResult result;
  result.n = n;
  result.a = a;
  result.value = incumbent.value;
  result.witness = SetFamily(n, incumbent.members);
  const bool hit_cap = incumbent.value >= cap;
  const bool hit_target = stop_at && incumbent.value >= *stop_at;
  result.proven_optimal = hit_cap || (!clock.exhausted() && !hit_target);
  result.stats = clock.stats();
  return result;
}

std::size_t ceil_div(std::size_t x, std::size_t y) { return (x + y - 1) / y; }

// Shrinks a union-closed family to exactly m members by repeatedly dropping
// the smallest inclusion-minimal member.
SetFamily trim_to(SetFamily family, std::size_t m) {
  while (family.size() > m) family = without(family, minimal_members(family).front());
  return family;
}

GResult g_by_decision(int n, std::size_t m, const SearchBudget& budget) {
  const auto start = Clock::now();
  GResult result;
  result.n = n;
  result.m = m;
  result.proven_optimal = true;
  // Every nonempty member adds at least one to the total frequency.
  long a = static_cast<long>(ceil_div(m > 0 ? m - 1 : 0, n));
  if (a == 0) {
    // m == 1: {∅} has top frequency 0.
    result.value = 0;
    result.witness = SetFamily(n, {0});
    result.stats = {1, seconds_since(start)};
    return result;
  }
  std::uint64_t nodes = 0;
  for (;; ++a) {
    SearchBudget left = budget;
    if (left.max_nodes) left.max_nodes = *left.max_nodes > nodes ? *left.max_nodes - nodes : 1;
    if (left.max_seconds) left.max_seconds = std::max(1e-3, *left.max_seconds - seconds_since(start));
    FResult f = f_branch_and_bound(n, a, left, m);
    nodes += f.stats.nodes;
    if (f.value >= m) {
      result.witness = trim_to(f.witness, m);
      result.value = max_frequency(result.witness).count;
      break;
    }
    if (!f.proven_optimal) {
      // Could not rule out this a; fall back to the power-set-derived
      // family, whose top frequency is an upper bound.
      result.proven_optimal = false;
      result.witness = trim_to(SetFamily::power_set(n), m);
      result.value = max_frequency(result.witness).count;
      break;
    }
  }
  result.stats = {nodes, seconds_since(start)};
  return result;
}

}  // namespace

void SearchBudget::validate() const {
  if (max_nodes && *max_nodes == 0) throw SearchError("max_nodes must be positive");
  if (max_seconds && !(*max_seconds > 0)) throw SearchError("max_seconds must be positive");
}

unsigned search_threads() {
  if (const char* env = std::getenv("FRANKL_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FResult compute_f(int n, long a, const SearchBudget& budget) {
  check_ground(n);
  if (a < 0) throw SearchError("frequency cap must be >= 0, got " + std::to_string(a));
  budget.validate();
  if (n <= 4) return f_by_enumeration(n, a);
  return f_branch_and_bound(n, a, budget, std::nullopt);
}

FResult compute_f_branch_and_bound(int n, long a, const SearchBudget& budget,
                                   std::optional<std::size_t> stop_at) {
  check_ground(n);
  if (a < 0) throw SearchError("frequency cap must be >= 0, got " + std::to_string(a));
  budget.validate();
  return f_branch_and_bound(n, a, budget, stop_at);
}

GResult compute_g_by_complements(int n, std::size_t m, const SearchBudget& budget) {
  check_ground(n);
  const std::size_t total = power_set_size(n);
  if (m < 1 || m > total) throw SearchError("family size must be in [1, 2^n]");
  const std::size_t k = total - m;
  if (k > static_cast<std::size_t>(n)) throw SearchError("complement enumeration needs 2^n - m <= n");
  budget.validate();

  BudgetClock clock(budget);
  std::optional<SetFamily> witness;
  std::size_t best = SIZE_MAX;
  std::vector<std::uint8_t> in(total, 1);
  std::vector<std::uint32_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<std::uint32_t>(i);

  bool exhausted = false;
  for (;;) {
    if (!clock.tick()) {
      exhausted = true;
      break;
    }
    for (auto p : pick) in[p] = 0;
    std::vector<SubsetMask> masks;
    masks.reserve(m);
    for (std::uint32_t s = 0; s < total; ++s) {
      if (in[s]) masks.push_back(static_cast<SubsetMask>(s));
    }
    for (auto p : pick) in[p] = 1;
    SetFamily family(n, std::move(masks));
    if (is_union_closed(family)) {
      const std::size_t top = max_frequency(family).count;
      if (top < best) {
        best = top;
        witness.reset();
      }
      if (top == best) keep_smaller(witness, std::move(family));
    }
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == total - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  GResult result;
  result.n = n;
  result.m = m;
  if (witness) {
    result.value = best;
    result.witness = *witness;
  } else {
    result.witness = trim_to(SetFamily::power_set(n), m);
    result.value = max_frequency(result.witness).count;
  }
  result.proven_optimal = !exhausted;
  result.stats = clock.stats();
  return result;
}

GResult compute_g(int n, std::size_t m, const SearchBudget& budget) {
  check_ground(n);
  const std::size_t total = power_set_size(n);
  if (m < 1 || m > total) {
    throw SearchError("family size must be in [1, 2^n] = [1, " + std::to_string(total) + "]");
  }
  budget.validate();
  if (total - m <= static_cast<std::size_t>(n)) return compute_g_by_complements(n, m, budget);
  if (n <= 4) return g_by_enumeration(n, m);
  return g_by_decision(n, m, budget);
}

void for_each_union_closed(int n, const std::function<void(const SetFamily&)>& visit) {
  for (const auto& fam : closed_words(n)) visit(family_of_word(n, fam.word));
}

std::vector<SetFamily> enumerate_union_closed(int n) {
  std::vector<SetFamily> out;
  for_each_union_closed(n, [&out](const SetFamily& f) { out.push_back(f); });
  return out;
}

SetFamily random_union_closed(int n, std::uint64_t seed, const Rational& raw_density) {
  Rational density = raw_density;
  density.canonicalize();
  check_ground(n);
  if (density < 0 || density > 1) throw SearchError("density must lie in [0, 1]");
  if (!density.get_den().fits_ulong_p()) throw SearchError("density denominator too large");
  const std::uint64_t num = density.get_num().get_ui();
  const std::uint64_t den = density.get_den().get_ui();
  std::mt19937_64 rng(seed);
  std::vector<SubsetMask> masks;
  for (std::uint32_t s = 0; s < power_set_size(n); ++s) {
    if (rng() % den < num) masks.push_back(static_cast<SubsetMask>(s));
  }
  return union_closure(SetFamily(n, std::move(masks)));
}

DualityReport check_fg_duality(int n, long a_max) {
  if (n < 1 || n > 4) throw SearchError("duality check needs 1 <= n <= 4");
  if (a_max < 1) throw SearchError("a_max must be >= 1");
  DualityReport report;
  report.n = n;
  report.a_max = a_max;
  for (long a = 1; a <= a_max; ++a) report.f_values.push_back(compute_f(n, a).value);
  const std::size_t total = power_set_size(n);
  for (std::size_t m = 1; m <= total; ++m) report.g_values.push_back(compute_g(n, m).value);
  for (long a = 1; a <= a_max; ++a) {
    for (std::size_t m = 1; m <= total; ++m) {
      const std::size_t f = report.f_values[a - 1];
      const std::size_t g = report.g_values[m - 1];
      if ((f >= m) != (g <= static_cast<std::size_t>(a))) report.violations.push_back({a, m, f, g});
    }
  }
  return report;
}

nlohmann::json to_json(const FResult& r, bool with_stats) {
  nlohmann::json j = {{"n", r.n},
                      {"a", r.a},
                      {"value", r.value},
                      {"proven_optimal", r.proven_optimal},
                      {"witness", to_json(r.witness)}};
  if (with_stats) {
    j["nodes"] = r.stats.nodes;
    j["seconds"] = r.stats.seconds;
  }
  return j;
}

nlohmann::json to_json(const GResult& r, bool with_stats) {
  nlohmann::json j = {{"n", r.n},
                      {"m", r.m},
                      {"value", r.value},
                      {"proven_optimal", r.proven_optimal},
                      {"witness", to_json(r.witness)}};
  if (with_stats) {
    j["nodes"] = r.stats.nodes;
    j["seconds"] = r.stats.seconds;
  }
  return j;
}

}  // namespace frankl
