#pragma once

// Rigorous enclosures of the reciprocal Jacobsthal series
//
//   recip              sum_{k>=n} 1/J(k)
//   recip-squared      sum_{k>=n} 1/J(k)^2
//   alt-recip          sum_{k>=n} (-1)^k/J(k)
//   alt-recip-squared  sum_{k>=n} (-1)^k/J(k)^2
//
// An enclosure is an exact partial sum up to index K plus an interval that
// provably contains the remainder. Positive families bound the remainder
// with 2^(k-2) < J(k) < 2^(k-1) (k >= 3) summed geometrically; alternating
// families bracket it between 0 and the first omitted term, which is valid
// once |term| strictly decreases (k >= 2).

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "jacobsthal/rational.hpp"
#include "jacobsthal/sequence.hpp"

namespace jacobsthal {

enum class Family { recip, recip_squared, alt_recip, alt_recip_squared };

std::string_view to_string(Family f);
/// Accepts the names printed by to_string. Throws std::invalid_argument.
Family parse_family(std::string_view name);

bool is_alternating(Family f);

struct SeriesSpec {
  Family family;
  Index start;

  /// Throws std::invalid_argument when start == 0.
  SeriesSpec(Family f, Index s);
  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

class NeedMoreTerms : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Enclosure {
  RatInterval interval;
  Index terms;  // last summed index K
  SeriesSpec spec;
};

/// Refinement schedule: K starts at start + 8 and doubles, never exceeding
/// start + max_terms - 1.
struct RefinePolicy {
  static constexpr Index kDefaultMaxTerms = 4097;
  static constexpr Index kInitialOffset = 8;
  Index max_terms = kDefaultMaxTerms;
};

/// Term k of the family, k >= 1.
Rat series_term(Family f, Index k);

/// Smallest K for which tail_bound is defined.
Index tail_threshold(const SeriesSpec& spec);

/// Exact sum of terms start..K. Throws std::invalid_argument when K < start.
Rat partial_sum(const SeriesSpec& spec, Index last);

/// Interval containing sum_{k > K} term(k). Throws NeedMoreTerms when K is
/// below tail_threshold(spec).
RatInterval tail_bound(const SeriesSpec& spec, Index last);

/// partial_sum(K) + tail_bound(K).
Enclosure enclosure_at(const SeriesSpec& spec, Index last);

struct RefineResult {
  Enclosure enclosure;
  bool goal_met;
};

/// Walks the refinement schedule, reusing partial sums, until `done`
/// accepts an enclosure or the cap is reached.
RefineResult enclose_until(const SeriesSpec& spec, const RefinePolicy& policy,
                           const std::function<bool(const Enclosure&)>& done);

/// Refines until the width is at most width_goal (> 0).
RefineResult enclose_sum(const SeriesSpec& spec, const Rat& width_goal,
                         const RefinePolicy& policy = {});

enum class DecideStatus { decided, undecided, not_invertible };

std::string_view to_string(DecideStatus s);

struct InverseResult {
  Enclosure sum;
  std::optional<RatInterval> inverse;
  std::optional<Integer> decided;
  DecideStatus status;
};

/// Encloses the reciprocal of the series limit and refines until its floor
/// (or ceiling) is decided. Reports not_invertible if no enclosure within
/// the cap excludes zero.
InverseResult enclose_inverse(const SeriesSpec& spec, Rounding mode,
                              const RefinePolicy& policy = {});

}  // namespace jacobsthal
