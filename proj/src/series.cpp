#include "jacobsthal/series.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace jacobsthal {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::recip: return "recip";
    case Family::recip_squared: return "recip-squared";
    case Family::alt_recip: return "alt-recip";
    case Family::alt_recip_squared: return "alt-recip-squared";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::recip, Family::recip_squared, Family::alt_recip,
                   Family::alt_recip_squared}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown series family '" + std::string(name) + "'");
}

bool is_alternating(Family f) {
  return f == Family::alt_recip || f == Family::alt_recip_squared;
}

namespace {

bool is_squared(Family f) {
  return f == Family::recip_squared || f == Family::alt_recip_squared;
}

void add_terms(Family f, Index from, Index to, Rat& sum) {
  for (Index k = from; k <= to; ++k) {
    sum += series_term(f, k);
    if (k == to) break;
  }
}

}  // namespace

SeriesSpec::SeriesSpec(Family f, Index s) : family(f), start(s) {
  if (s == 0) {
    throw std::invalid_argument("series start index must be >= 1 (J(0) = 0)");
  }
}

Rat series_term(Family f, Index k) {
  const Integer& j = jacobsthal_ref(k);
  Integer den = is_squared(f) ? Integer(j * j) : j;
  Integer num = (is_alternating(f) && k % 2 == 1) ? -1 : 1;
  return Rat(num, den);
}

Index tail_threshold(const SeriesSpec& spec) {
  return std::max<Index>(spec.start, is_alternating(spec.family) ? 2 : 3);
}

Rat partial_sum(const SeriesSpec& spec, Index last) {
  if (last < spec.start) {
    throw std::invalid_argument("partial_sum: last index below start");
  }
  Rat sum;
  add_terms(spec.family, spec.start, last, sum);
  return sum;
}

RatInterval tail_bound(const SeriesSpec& spec, Index last) {
  if (last < tail_threshold(spec)) {
    throw NeedMoreTerms("tail bound needs K >= " + std::to_string(tail_threshold(spec)) +
                        ", got " + std::to_string(last));
  }
  switch (spec.family) {
    case Family::recip: {
      // sum_{k>K} 2^(1-k) = 2^(1-K), sum_{k>K} 2^(2-k) = 2^(2-K)
      const Integer p = pow2(last);
      return {Rat(Integer(2), p), Rat(Integer(4), p)};
    }
    case Family::recip_squared: {
      // sum_{k>K} 4^(1-k) = 4^(1-K)/3, likewise for 4^(2-k)
      const Integer p = 3 * pow2(2 * static_cast<unsigned long>(last));
      return {Rat(Integer(4), p), Rat(Integer(16), p)};
    }
    case Family::alt_recip:
    case Family::alt_recip_squared: {
      const Rat t = series_term(spec.family, last + 1);
      return t.sign() < 0 ? RatInterval(t, Rat(0)) : RatInterval(Rat(0), t);
    }
  }
  throw std::logic_error("unhandled family");
}

Enclosure enclosure_at(const SeriesSpec& spec, Index last) {
  const RatInterval tail = tail_bound(spec, last);
  return Enclosure{tail + partial_sum(spec, last), last, spec};
}

RefineResult enclose_until(const SeriesSpec& spec, const RefinePolicy& policy,
                           const std::function<bool(const Enclosure&)>& done) {
  const Index threshold = tail_threshold(spec);
  const std::uint64_t max_terms = std::max<Index>(policy.max_terms, 1);
  const std::uint64_t wanted_cap = std::uint64_t{spec.start} + max_terms - 1;
  const Index cap = static_cast<Index>(std::clamp<std::uint64_t>(
      wanted_cap, threshold, std::numeric_limits<Index>::max() / 2));

  Index last = std::min<Index>(
      std::max<Index>(spec.start + RefinePolicy::kInitialOffset, threshold), cap);
  Rat sum = partial_sum(spec, last);
  for (;;) {
    Enclosure enc{tail_bound(spec, last) + sum, last, spec};
    if (done(enc)) return {std::move(enc), true};
    if (last >= cap) return {std::move(enc), false};
    const Index next = std::min<Index>(2 * last, cap);
    add_terms(spec.family, last + 1, next, sum);
    last = next;
  }
}

RefineResult enclose_sum(const SeriesSpec& spec, const Rat& width_goal,
                         const RefinePolicy& policy) {
  if (width_goal.sign() <= 0) {
    throw std::invalid_argument("width goal must be positive");
  }
  return enclose_until(spec, policy, [&](const Enclosure& e) {
    return e.interval.width() <= width_goal;
  });
}

std::string_view to_string(DecideStatus s) {
  switch (s) {
    case DecideStatus::decided: return "decided";
    case DecideStatus::undecided: return "undecided";
    case DecideStatus::not_invertible: return "not-invertible";
  }
  return "?";
}

InverseResult enclose_inverse(const SeriesSpec& spec, Rounding mode,
                              const RefinePolicy& policy) {
  std::optional<RatInterval> inverse;
  std::optional<Integer> decided;
  auto refined = enclose_until(spec, policy, [&](const Enclosure& e) {
    if (!e.interval.excludes_zero()) return false;
    inverse = interval_reciprocal(e.interval);
    decided = round_decide(*inverse, mode);
    return decided.has_value();
  });
  DecideStatus status = DecideStatus::decided;
  if (!refined.goal_met) {
    status = inverse ? DecideStatus::undecided : DecideStatus::not_invertible;
  }
  return InverseResult{std::move(refined.enclosure), std::move(inverse), std::move(decided),
                       status};
}

}  // namespace jacobsthal
