#pragma once

// Per-index decisions of the reciprocal-sum floor and ceiling claims.
//
// Each verdict carries the series enclosure it was decided on, so a
// verified or refuted status can be re-checked from the report alone.
// Strict inequalities are only certified when the whole enclosure clears
// the bound; touching it keeps refining.
//
// Two claims come in two readings: the claim as printed (stated) and what
// the inequality chain of its argument actually establishes
// (proof-implied). Both are computed from separate series evaluations.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacobsthal/rational.hpp"
#include "jacobsthal/series.hpp"

namespace jacobsthal {

enum class TheoremId { thm2_1, thm2_2, thm3_1, cor3_2, thm3_3 };
enum class Status { verified, refuted, undecided, not_applicable };
enum class Variant { stated, proof_implied };

/// "2.1", "2.2", "3.1", "3.2", "3.3".
std::string_view to_string(TheoremId id);
TheoremId parse_theorem(std::string_view text);
std::string_view to_string(Status s);
std::string_view to_string(Variant v);

struct Verdict {
  TheoremId theorem;
  Index n;
  Variant variant;
  Status status;
  std::optional<Integer> decided;
  std::optional<Integer> expected;
  std::optional<Enclosure> enclosure;
  std::optional<RatInterval> inverse;
  bool discrepancy = false;
  std::string note;
};

/// J(n-2) < (sum_{k>=n} 1/J(k))^-1 < 4(J(n-2)+1), n >= 2.
Verdict verify_thm_2_1(Index n, const RefinePolicy& policy = {});
/// 1/(4(J(n-2)+1)) < sum_{k>=n} 1/J(k) < 1/J(n-2), n >= 3.
Verdict verify_thm_2_1_bound(Index n, const RefinePolicy& policy = {});

struct VerdictPair {
  Verdict stated;
  Verdict proof_implied;
};

/// Odd n. Stated: floor((sum 1/J(k)^2)^-1) <= J(n-1)J(n). Proof-implied:
/// sum < 1/(J(n-1)J(n)) for n >= 3, floor = 0 at n = 1.
VerdictPair verify_thm_2_2(Index n, const RefinePolicy& policy = {});

/// Even n. Proof-implied: floor((sum (-1)^k/J(k))^-1) = 2^(n-1) - 1, with
/// the inverse strictly inside (2^(n-1) - 1, 2^(n-1)). Stated: the same
/// floor equation for the squared series.
VerdictPair verify_thm_3_1(Index n, const RefinePolicy& policy = {});

/// Odd n: floor((sum (-1)^k/J(k))^-1) <= -(2^(n-1) + 1).
Verdict verify_cor_3_2(Index n, const RefinePolicy& policy = {});

/// n >= 1: ceil((sum (-1)^k/J(k)^2)^-1) <= J(n-1)^2 + J(n)^2 - 1.
Verdict verify_thm_3_3(Index n, const RefinePolicy& policy = {});

/// Every verdict (both variants where a theorem has two) for one index.
/// Indices outside the theorem's domain give not-applicable verdicts.
std::vector<Verdict> verify_index(TheoremId id, Index n, const RefinePolicy& policy = {});

enum class Parity { any, even, odd };

/// Which reading(s) verify_range keeps.
///  primary: proof-implied for 2.2 and 3.1, stated for 2.1, 3.2, 3.3
enum class VariantSelection { primary, stated, proof_implied, all };

Parity parse_parity(std::string_view text);
VariantSelection parse_variant_selection(std::string_view text);

/// Whether n lies in the theorem's domain (index bound and parity).
bool admissible(TheoremId id, Index n);

struct RangeResult {
  std::vector<Verdict> verdicts;  // sorted by (n, variant)
  std::vector<std::string> warnings;
};

/// Verifies every admissible n in [lo, hi] matching the parity filter,
/// spread over `threads` workers (0 = hardware concurrency). The result is
/// independent of scheduling. Throws std::invalid_argument unless
/// 1 <= lo <= hi.
RangeResult verify_range(TheoremId id, Index lo, Index hi, Parity parity,
                         VariantSelection selection = VariantSelection::primary,
                         const RefinePolicy& policy = {}, unsigned threads = 0);

}  // namespace jacobsthal
