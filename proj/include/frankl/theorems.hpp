#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "frankl/family.hpp"
#include "frankl/search.hpp"

namespace frankl {

class TheoremError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ClaimStatus { kVerified, kViolated, kSkipped };

const char* to_string(ClaimStatus status);

/// Outcome of checking one claim on a stated scope. status is kViolated
/// exactly when violations is nonempty.
struct VerificationReport {
  VerificationReport() = default;
  VerificationReport(std::string claim_id, std::string claim_scope)
      : claim(std::move(claim_id)), scope(std::move(claim_scope)) {}

  std::string claim;
  std::string scope;
  ClaimStatus status = ClaimStatus::kVerified;
  std::vector<nlohmann::json> violations;
  nlohmann::json details = nlohmann::json::object();

  void add_violation(nlohmann::json v);
  /// Folds another report of the same claim into this one.
  void merge(const VerificationReport& other);
};

nlohmann::json to_json(const VerificationReport& report);

// Stable claim identifiers.
inline constexpr const char* kClaimMissingSubsets = "missing-subsets";
inline constexpr const char* kClaimMissingCovering = "missing-covering";
inline constexpr const char* kClaimG = "thm-g";
inline constexpr const char* kClaimF = "thm-f-2n-minus-n";
inline constexpr const char* kClaimMonotonicity = "monotonicity";
inline constexpr const char* kClaimDuality = "fg-duality";
inline constexpr const char* kClaimFranklSmall = "frankl-small-n";

/// For a union-closed F: every missing S with |S| >= 2 has at most one
/// member among its (|S|-1)-subsets. Throws TheoremError if F is not
/// union-closed.
VerificationReport check_missing_subsets(const SetFamily& family);

/// For a union-closed F with missing sets S_1..S_k covering l elements,
/// k >= l. Throws TheoremError if F is not union-closed.
VerificationReport check_missing_covering(const SetFamily& family);

/// g(n, 2^n - i) = 2^(n-1) for 0 <= i <= n-1. Requires 3 <= n <= 5.
VerificationReport verify_g_theorem(int n, const SearchBudget& budget = {});

/// 2^[n] without its n singletons. Throws std::logic_error if the result
/// is not union-closed of size 2^n - n with every frequency 2^(n-1) - 1.
SetFamily powerset_minus_singletons(int n);

/// f(n, 2^(n-1) - 1) = 2^n - n: the construction above gives the lower
/// bound for any n; the upper bound is checked by enumeration for n <= 4
/// and reported as skipped beyond.
VerificationReport verify_f_theorem(int n);

/// f(n,a) <= f(n+1,a) for 1 <= n < n_max, and f(n,a) = f(n+1,a) once
/// n >= a-1. details["values"] holds f(1..n_max, a).
VerificationReport verify_monotonicity(long a, int n_max, const SearchBudget& budget = {});

/// Both lemma checks on every union-closed family with the given n <= 4.
std::vector<VerificationReport> verify_lemmas_exhaustive(int n);
/// Both lemma checks on `count` seeded random closures on [n].
std::vector<VerificationReport> verify_lemmas_random(int n, int count, std::uint64_t seed = 1);

/// The f/g equivalence f(n,a) >= m <=> g(n,m) <= a, as a report.
VerificationReport verify_fg_duality(int n, long a_max);

/// Every nonempty union-closed family on n <= 4 other than {∅} has an
/// element in at least half its members.
VerificationReport verify_frankl_small(int n);

/// Runs one claim (or "all") at its default scope; `n` narrows the scope
/// where the claim is indexed by ground size. Throws TheoremError on an
/// unknown claim id.
std::vector<VerificationReport> run_claim(const std::string& claim, std::optional<int> n = std::nullopt,
                                          const SearchBudget& budget = {});

std::vector<std::string> claim_ids();

}  // namespace frankl
