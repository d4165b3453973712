#include "frankl/theorems.hpp"

#include <algorithm>

#include "frankl/rational.hpp"

namespace frankl {

const char* to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kVerified:
      return "verified";
    case ClaimStatus::kViolated:
      return "violated";
    case ClaimStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

void VerificationReport::add_violation(nlohmann::json v) {
  violations.push_back(std::move(v));
  status = ClaimStatus::kViolated;
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& v : other.violations) add_violation(v);
  if (status == ClaimStatus::kVerified && other.status == ClaimStatus::kSkipped) status = ClaimStatus::kSkipped;
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"claim", r.claim},
          {"scope", r.scope},
          {"status", to_string(r.status)},
          {"violations", r.violations},
          {"details", r.details}};
}

namespace {

void require_union_closed(const SetFamily& family) {
  if (!is_union_closed(family)) throw TheoremError("family is not union-closed: " + format_family(family));
}

}  // namespace

VerificationReport check_missing_subsets(const SetFamily& family) {
  require_union_closed(family);
  VerificationReport report{kClaimMissingSubsets, "n=" + std::to_string(family.n()) + " single family"};
  for (SubsetMask s : complement(family).masks()) {
    if (popcount(s) < 2) continue;
    int below = 0;
    for (int e = 0; e < family.n(); ++e) {
      if ((s >> e & 1u) && family.contains(s ^ (1u << e))) ++below;
    }
    if (below > 1) {
      report.add_violation({{"family", to_json(family)}, {"missing", s}, {"present_maximal_subsets", below}});
    }
  }
  return report;
}

VerificationReport check_missing_covering(const SetFamily& family) {
  require_union_closed(family);
  VerificationReport report{kClaimMissingCovering, "n=" + std::to_string(family.n()) + " single family"};
  const SetFamily missing = complement(family);
  std::uint32_t covered = 0;
  for (SubsetMask s : missing.masks()) covered |= s;
  const std::size_t k = missing.size();
  const int l = popcount(covered);
  report.details = {{"k", k}, {"l", l}};
  if (k < static_cast<std::size_t>(l)) {
    report.add_violation({{"family", to_json(family)}, {"k", k}, {"l", l}});
  }
  return report;
}

VerificationReport verify_g_theorem(int n, const SearchBudget& budget) {
  if (n < 3 || n > 5) throw TheoremError("g theorem check needs 3 <= n <= 5");
  VerificationReport report{kClaimG, "n=" + std::to_string(n) + ", 0<=i<=" + std::to_string(n - 1)};
  const std::size_t total = power_set_size(n);
  const std::size_t expected = total / 2;
  nlohmann::json values = nlohmann::json::object();
  for (int i = 0; i < n; ++i) {
    const std::size_t m = total - i;
    const GResult g = compute_g(n, m, budget);
    if (!g.proven_optimal) {
      if (report.status == ClaimStatus::kVerified) report.status = ClaimStatus::kSkipped;
      values[std::to_string(m)] = nullptr;
      continue;
    }
    values[std::to_string(m)] = g.value;
    if (g.value != expected) {
      report.add_violation({{"n", n}, {"m", m}, {"g", g.value}, {"expected", expected}, {"witness", to_json(g.witness)}});
    }
  }
  report.details = {{"g", values}, {"expected", expected}};
  return report;
}

SetFamily powerset_minus_singletons(int n) {
  std::vector<SubsetMask> masks;
  for (std::uint32_t s = 0; s < power_set_size(n); ++s) {
    if (popcount(s) != 1) masks.push_back(static_cast<SubsetMask>(s));
  }
  SetFamily family(n, std::move(masks));
  if (!is_union_closed(family) || family.size() != power_set_size(n) - n) {
    throw std::logic_error("power set minus singletons has the wrong shape");
  }
  for (std::size_t c : frequencies(family).counts) {
    if (c != power_set_size(n) / 2 - 1) throw std::logic_error("power set minus singletons has a wrong frequency");
  }
  return family;
}

VerificationReport verify_f_theorem(int n) {
  if (n < 1 || n > kMaxGround) throw TheoremError("f theorem check needs 1 <= n <= 16");
  VerificationReport report{kClaimF, "n=" + std::to_string(n)};
  const std::size_t expected = power_set_size(n) - n;
  const long a = static_cast<long>(power_set_size(n) / 2) - 1;

  const SetFamily lower = powerset_minus_singletons(n);
  report.details = {{"a", a}, {"expected", expected}, {"lower_bound", lower.size()}};
  if (lower.size() != expected || max_frequency(lower).count > static_cast<std::size_t>(a)) {
    report.add_violation({{"leg", "lower"}, {"family", to_json(lower)}});
  }
  if (n > 4) {
    report.details["upper_bound"] = "skipped";
    if (report.status == ClaimStatus::kVerified) report.status = ClaimStatus::kSkipped;
    return report;
  }
  const FResult f = compute_f(n, a);
  report.details["upper_bound"] = f.value;
  if (f.value != expected) {
    report.add_violation({{"leg", "upper"}, {"f", f.value}, {"witness", to_json(f.witness)}});
  }
  return report;
}

VerificationReport verify_monotonicity(long a, int n_max, const SearchBudget& budget) {
  if (a < 1 || n_max < 1) throw TheoremError("monotonicity check needs a >= 1 and n_max >= 1");
  VerificationReport report{kClaimMonotonicity, "a=" + std::to_string(a) + ", 1<=n<=" + std::to_string(n_max)};
  std::vector<std::optional<std::size_t>> values;
  nlohmann::json shown = nlohmann::json::array();
  for (int n = 1; n <= n_max; ++n) {
    const FResult f = compute_f(n, a, budget);
    if (f.proven_optimal) {
      values.emplace_back(f.value);
      shown.push_back(f.value);
    } else {
      values.emplace_back();
      shown.push_back(nullptr);
      if (report.status == ClaimStatus::kVerified) report.status = ClaimStatus::kSkipped;
    }
  }
  for (int n = 1; n < n_max; ++n) {
    const auto& lo = values[n - 1];
    const auto& hi = values[n];
    if (!lo || !hi) continue;
    if (*lo > *hi) report.add_violation({{"kind", "increase"}, {"n", n}, {"f_n", *lo}, {"f_n1", *hi}});
    if (n >= a - 1 && *lo != *hi) report.add_violation({{"kind", "plateau"}, {"n", n}, {"f_n", *lo}, {"f_n1", *hi}});
  }
  // Smallest n from which every computed value agrees with the last one.
  std::optional<int> observed;
  if (values.back()) {
    observed = n_max;
    while (*observed > 1 && values[*observed - 2] == values.back()) --*observed;
  }
  report.details = {{"a", a}, {"values", shown}, {"plateau_from", std::max<long>(1, a - 1)}};
  report.details["plateau_observed_from"] = observed ? nlohmann::json(*observed) : nlohmann::json(nullptr);
  return report;
}

std::vector<VerificationReport> verify_lemmas_exhaustive(int n) {
  VerificationReport subsets{kClaimMissingSubsets, "all union-closed families, n=" + std::to_string(n)};
  VerificationReport covering{kClaimMissingCovering, "all union-closed families, n=" + std::to_string(n)};
  std::size_t families = 0;
  for_each_union_closed(n, [&](const SetFamily& f) {
    subsets.merge(check_missing_subsets(f));
    covering.merge(check_missing_covering(f));
    ++families;
  });
  subsets.details = covering.details = {{"families", families}};
  return {subsets, covering};
}

std::vector<VerificationReport> verify_lemmas_random(int n, int count, std::uint64_t seed) {
  const std::string scope = std::to_string(count) + " random closures, n=" + std::to_string(n);
  VerificationReport subsets{kClaimMissingSubsets, scope};
  VerificationReport covering{kClaimMissingCovering, scope};
  const std::uint64_t masks = power_set_size(n);
  for (int i = 0; i < count; ++i) {
    // Roughly 1..8 generators per family, so closures stay well short of
    // the power set.
    const Rational density(static_cast<long>(1 + i % 8), static_cast<unsigned long>(masks));
    const SetFamily f = random_union_closed(n, seed + static_cast<std::uint64_t>(i), density);
    subsets.merge(check_missing_subsets(f));
    covering.merge(check_missing_covering(f));
  }
  subsets.details = covering.details = {{"families", count}, {"seed", seed}};
  return {subsets, covering};
}

VerificationReport verify_fg_duality(int n, long a_max) {
  VerificationReport report{kClaimDuality, "n=" + std::to_string(n) + ", 1<=a<=" + std::to_string(a_max)};
  const DualityReport d = check_fg_duality(n, a_max);
  for (const auto& v : d.violations) {
    report.add_violation({{"a", v.a}, {"m", v.m}, {"f", v.f_value}, {"g", v.g_value}});
  }
  report.details = {{"f", d.f_values}, {"g", d.g_values}};
  return report;
}

VerificationReport verify_frankl_small(int n) {
  VerificationReport report{kClaimFranklSmall, "all nonempty union-closed families, n=" + std::to_string(n)};
  std::size_t checked = 0;
  for_each_union_closed(n, [&](const SetFamily& f) {
    if (f.empty() || (f.size() == 1 && f.masks()[0] == 0)) return;
    ++checked;
    if (!frankl_witness(f)) report.add_violation({{"family", to_json(f)}});
  });
  report.details = {{"families", checked}, {"excluded", "the empty family and {{}}"}};
  return report;
}

std::vector<std::string> claim_ids() {
  return {kClaimMissingSubsets, kClaimMissingCovering, kClaimG,         kClaimF,
          kClaimMonotonicity,   kClaimDuality,         kClaimFranklSmall};
}

std::vector<VerificationReport> run_claim(const std::string& claim, std::optional<int> n, const SearchBudget& budget) {
  auto ns = [&](int lo, int hi) {
    std::vector<int> out;
    if (n) {
      out.push_back(*n);
    } else {
      for (int i = lo; i <= hi; ++i) out.push_back(i);
    }
    return out;
  };
  std::vector<VerificationReport> out;
  if (claim == "all") {
    for (const auto& id : claim_ids()) {
      auto part = run_claim(id, n, budget);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (claim == kClaimMissingSubsets || claim == kClaimMissingCovering) {
    const std::size_t which = claim == kClaimMissingSubsets ? 0 : 1;
    for (int k : ns(1, 8)) {
      out.push_back(k <= 4 ? verify_lemmas_exhaustive(k)[which] : verify_lemmas_random(k, 1000)[which]);
    }
  } else if (claim == kClaimG) {
    for (int k : ns(3, 5)) out.push_back(verify_g_theorem(k, budget));
  } else if (claim == kClaimF) {
    for (int k : ns(1, 4)) out.push_back(verify_f_theorem(k));
  } else if (claim == kClaimMonotonicity) {
    // Ground sizes up to 5 for caps 1..3.
    for (long a = 1; a <= 3; ++a) out.push_back(verify_monotonicity(a, n.value_or(5), budget));
  } else if (claim == kClaimDuality) {
    for (int k : ns(1, 4)) out.push_back(verify_fg_duality(k, static_cast<long>(power_set_size(k))));
  } else if (claim == kClaimFranklSmall) {
    for (int k : ns(1, 4)) out.push_back(verify_frankl_small(k));
  } else {
    throw TheoremError("unknown claim '" + claim + "'");
  }
  return out;
}

}  // namespace frankl
