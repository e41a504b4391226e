#include "jacobsthal/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace jacobsthal {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::thm2_1: return "2.1";
    case TheoremId::thm2_2: return "2.2";
    case TheoremId::thm3_1: return "3.1";
    case TheoremId::cor3_2: return "3.2";
    case TheoremId::thm3_3: return "3.3";
  }
  return "?";
}

TheoremId parse_theorem(std::string_view text) {
  for (TheoremId id : {TheoremId::thm2_1, TheoremId::thm2_2, TheoremId::thm3_1,
                       TheoremId::cor3_2, TheoremId::thm3_3}) {
    if (text == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown theorem '" + std::string(text) + "'");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::undecided: return "undecided";
    case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string_view to_string(Variant v) {
  return v == Variant::stated ? "stated" : "proof-implied";
}

Parity parse_parity(std::string_view text) {
  if (text == "any") return Parity::any;
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw std::invalid_argument("unknown parity '" + std::string(text) + "'");
}

VariantSelection parse_variant_selection(std::string_view text) {
  if (text == "auto") return VariantSelection::primary;
  if (text == "stated") return VariantSelection::stated;
  if (text == "proof-implied") return VariantSelection::proof_implied;
  if (text == "all") return VariantSelection::all;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

namespace {

const Integer& J(Index n) { return jacobsthal_ref(n); }

Verdict blank(TheoremId id, Index n, Variant v) {
  return Verdict{id, n, v, Status::not_applicable, std::nullopt, std::nullopt,
                 std::nullopt, std::nullopt, false, {}};
}

Verdict not_applicable(TheoremId id, Index n, Variant v, std::string note) {
  Verdict out = blank(id, n, v);
  out.note = std::move(note);
  return out;
}

std::string cap_note(const Enclosure& e) {
  return "refinement cap reached at K=" + std::to_string(e.terms);
}

// `judge` returns a status once the enclosure settles the claim and nullopt
// while it is still ambiguous.
using SumJudge = std::function<std::optional<Status>(const Enclosure&)>;

Verdict decide_on_sum(TheoremId id, Index n, Variant v, const SeriesSpec& spec,
                      const RefinePolicy& policy, const SumJudge& judge) {
  std::optional<Status> status;
  auto refined = enclose_until(spec, policy, [&](const Enclosure& e) {
    status = judge(e);
    return status.has_value();
  });
  Verdict out = blank(id, n, v);
  out.status = refined.goal_met ? *status : Status::undecided;
  if (!refined.goal_met) out.note = cap_note(refined.enclosure);
  out.enclosure = std::move(refined.enclosure);
  return out;
}

// Status of "lower < x < upper" against an interval, or nullopt if the
// interval straddles a bound.
std::optional<Status> strictly_between(const RatInterval& x, const Rat& lower, const Rat& upper) {
  if (lower < x.lo() && x.hi() < upper) return Status::verified;
  if (x.hi() <= lower || x.lo() >= upper) return Status::refuted;
  return std::nullopt;
}

// Refines until the rounded inverse is decided; the verdict's status is
// left undecided/not-applicable for the caller to settle.
Verdict decide_rounded_inverse(TheoremId id, Index n, Variant v, const SeriesSpec& spec,
                               Rounding mode, const RefinePolicy& policy) {
  InverseResult r = enclose_inverse(spec, mode, policy);
  Verdict out = blank(id, n, v);
  out.enclosure = std::move(r.sum);
  out.inverse = std::move(r.inverse);
  out.decided = std::move(r.decided);
  out.status = Status::undecided;
  if (r.status == DecideStatus::undecided) {
    out.note = cap_note(*out.enclosure) + " before the " + std::string(to_string(mode)) +
               " was decided";
  } else if (r.status == DecideStatus::not_invertible) {
    out.note = "sum enclosure does not exclude zero; " + cap_note(*out.enclosure);
  }
  return out;
}

void settle(Verdict& v, bool claim_holds) {
  if (v.decided) v.status = claim_holds ? Status::verified : Status::refuted;
}

void mark_discrepancy(VerdictPair& p) {
  auto settled = [](const Verdict& v) {
    return v.status == Status::verified || v.status == Status::refuted;
  };
  if (settled(p.stated) && settled(p.proof_implied) && p.stated.status != p.proof_implied.status) {
    p.stated.discrepancy = true;
    p.proof_implied.discrepancy = true;
  }
}

std::string str(const Integer& z) { return z.get_str(10); }

}  // namespace

Verdict verify_thm_2_1(Index n, const RefinePolicy& policy) {
  constexpr auto id = TheoremId::thm2_1;
  if (n < 2) return not_applicable(id, n, Variant::stated, "requires n >= 2");
  const Rat lower(J(n - 2));
  const Rat upper(Integer(4 * (J(n - 2) + 1)));
  std::optional<RatInterval> inverse;
  Verdict out = decide_on_sum(id, n, Variant::stated, SeriesSpec(Family::recip, n), policy,
                              [&](const Enclosure& e) -> std::optional<Status> {
                                inverse = interval_reciprocal(e.interval);
                                return strictly_between(*inverse, lower, upper);
                              });
  out.inverse = std::move(inverse);
  const std::string bounds = "J(n-2)=" + lower.str() + " < inverse < 4(J(n-2)+1)=" + upper.str();
  out.note = out.note.empty() ? bounds : bounds + "; " + out.note;
  return out;
}

Verdict verify_thm_2_1_bound(Index n, const RefinePolicy& policy) {
  constexpr auto id = TheoremId::thm2_1;
  if (n < 3) {
    return not_applicable(id, n, Variant::proof_implied, "requires n >= 3 (1/J(n-2) undefined)");
  }
  const Rat lower = Rat(Integer(1), Integer(4 * (J(n - 2) + 1)));
  const Rat upper = Rat(Integer(1), J(n - 2));
  Verdict out = decide_on_sum(id, n, Variant::proof_implied, SeriesSpec(Family::recip, n), policy,
                              [&](const Enclosure& e) {
                                return strictly_between(e.interval, lower, upper);
                              });
  const std::string bounds = lower.str() + " < sum < " + upper.str();
  out.note = out.note.empty() ? bounds : bounds + "; " + out.note;
  return out;
}

VerdictPair verify_thm_2_2(Index n, const RefinePolicy& policy) {
  constexpr auto id = TheoremId::thm2_2;
  if (n % 2 == 0) {
    return {not_applicable(id, n, Variant::stated, "requires odd n"),
            not_applicable(id, n, Variant::proof_implied, "requires odd n")};
  }
  const Integer bound = J(n - 1) * J(n);
  const SeriesSpec spec(Family::recip_squared, n);

  Verdict stated = decide_rounded_inverse(id, n, Variant::stated, spec, Rounding::floor, policy);
  stated.expected = bound;
  settle(stated, stated.decided && *stated.decided <= bound);
  if (stated.status == Status::refuted) {
    stated.note = "floor " + str(*stated.decided) + " exceeds J(n-1)J(n)=" + str(bound) +
                  "; the argument's bound sum < 1/(J(n-1)J(n)) forces floor >= J(n-1)J(n)";
  }

  Verdict implied = blank(id, n, Variant::proof_implied);
  if (n == 1) {
    implied = decide_rounded_inverse(id, n, Variant::proof_implied, spec, Rounding::floor, policy);
    implied.expected = Integer(0);
    settle(implied, implied.decided && *implied.decided == 0);
    if (implied.note.empty()) implied.note = "floor = 0 = J(0)J(1)";
  } else {
    const Rat limit = Rat(Integer(1), bound);
    implied = decide_on_sum(id, n, Variant::proof_implied, spec, policy,
                            [&](const Enclosure& e) -> std::optional<Status> {
                              if (e.interval.hi() < limit) return Status::verified;
                              if (e.interval.lo() >= limit) return Status::refuted;
                              return std::nullopt;
                            });
    const std::string what = "sum < 1/(J(n-1)J(n)) = " + limit.str();
    implied.note = implied.note.empty() ? what : what + "; " + implied.note;
  }

  VerdictPair out{std::move(stated), std::move(implied)};
  mark_discrepancy(out);
  return out;
}

VerdictPair verify_thm_3_1(Index n, const RefinePolicy& policy) {
  constexpr auto id = TheoremId::thm3_1;
  if (n % 2 == 1 || n < 2) {
    return {not_applicable(id, n, Variant::stated, "requires even n >= 2"),
            not_applicable(id, n, Variant::proof_implied, "requires even n >= 2")};
  }
  const Integer expected = pow2(n - 1) - 1;
  const Rat bracket_lo(expected);
  const Rat bracket_hi(pow2(n - 1));

  // Unsquared series, as manipulated in the argument. Refine until the
  // floor is decided and the bracket (2^(n-1)-1, 2^(n-1)) is settled.
  std::optional<RatInterval> inverse;
  std::optional<Integer> decided;
  std::optional<Status> bracket;
  Verdict implied = decide_on_sum(
      id, n, Variant::proof_implied, SeriesSpec(Family::alt_recip, n), policy,
      [&](const Enclosure& e) -> std::optional<Status> {
        if (!e.interval.excludes_zero()) return std::nullopt;
        inverse = interval_reciprocal(e.interval);
        decided = floor_decide(*inverse);
        bracket = strictly_between(*inverse, bracket_lo, bracket_hi);
        if (!decided || !bracket) return std::nullopt;
        return (*decided == expected && *bracket == Status::verified) ? Status::verified
                                                                       : Status::refuted;
      });
  implied.inverse = std::move(inverse);
  implied.decided = std::move(decided);
  implied.expected = expected;
  if (implied.status == Status::verified) {
    implied.note = "inverse in (2^(n-1)-1, 2^(n-1))";
  } else if (implied.status == Status::refuted && bracket == Status::refuted) {
    implied.note = "inverse outside (2^(n-1)-1, 2^(n-1))";
  }

  // Squared series, as printed.
  Verdict stated = decide_rounded_inverse(id, n, Variant::stated,
                                          SeriesSpec(Family::alt_recip_squared, n),
                                          Rounding::floor, policy);
  stated.expected = expected;
  settle(stated, stated.decided && *stated.decided == expected);
  if (stated.status == Status::refuted) {
    stated.note = "floor " + str(*stated.decided) + " != 2^(n-1)-1=" + str(expected) +
                  " for the squared series";
  }

  VerdictPair out{std::move(stated), std::move(implied)};
  mark_discrepancy(out);
  return out;
}

Verdict verify_cor_3_2(Index n, const RefinePolicy& policy) {
  constexpr auto id = TheoremId::cor3_2;
  if (n % 2 == 0) return not_applicable(id, n, Variant::stated, "requires odd n");
  const Integer bound = -(pow2(n - 1) + 1);
  Verdict out = decide_rounded_inverse(id, n, Variant::stated, SeriesSpec(Family::alt_recip, n),
                                       Rounding::floor, policy);
  out.expected = bound;
  settle(out, out.decided && *out.decided <= bound);
  return out;
}

Verdict verify_thm_3_3(Index n, const RefinePolicy& policy) {
  constexpr auto id = TheoremId::thm3_3;
  if (n < 1) return not_applicable(id, n, Variant::stated, "requires n >= 1");
  const Integer bound = J(n - 1) * J(n - 1) + J(n) * J(n) - 1;
  Verdict out = decide_rounded_inverse(id, n, Variant::stated,
                                       SeriesSpec(Family::alt_recip_squared, n), Rounding::ceil,
                                       policy);
  out.expected = bound;
  settle(out, out.decided && *out.decided <= bound);
  const bool covered = n >= 5 && n % 2 == 0;
  if (!covered && out.status != Status::undecided) {
    out.note = "outside the argument's coverage (even n >= 5)";
    if (n % 2 == 1) out.note += "; sum is negative";
  }
  return out;
}

std::vector<Verdict> verify_index(TheoremId id, Index n, const RefinePolicy& policy) {
  switch (id) {
    case TheoremId::thm2_1:
      return {verify_thm_2_1(n, policy), verify_thm_2_1_bound(n, policy)};
    case TheoremId::thm2_2: {
      auto p = verify_thm_2_2(n, policy);
      return {std::move(p.stated), std::move(p.proof_implied)};
    }
    case TheoremId::thm3_1: {
      auto p = verify_thm_3_1(n, policy);
      return {std::move(p.stated), std::move(p.proof_implied)};
    }
    case TheoremId::cor3_2: return {verify_cor_3_2(n, policy)};
    case TheoremId::thm3_3: return {verify_thm_3_3(n, policy)};
  }
  return {};
}

bool admissible(TheoremId id, Index n) {
  switch (id) {
    case TheoremId::thm2_1: return n >= 2;
    case TheoremId::thm2_2: return n % 2 == 1;
    case TheoremId::thm3_1: return n >= 2 && n % 2 == 0;
    case TheoremId::cor3_2: return n % 2 == 1;
    case TheoremId::thm3_3: return n >= 1;
  }
  return false;
}

namespace {

bool selected(TheoremId id, Variant v, VariantSelection sel) {
  switch (sel) {
    case VariantSelection::all: return true;
    case VariantSelection::stated: return v == Variant::stated;
    case VariantSelection::proof_implied: return v == Variant::proof_implied;
    case VariantSelection::primary: {
      const bool paired = id == TheoremId::thm2_2 || id == TheoremId::thm3_1;
      return paired ? v == Variant::proof_implied : v == Variant::stated;
    }
  }
  return false;
}

bool parity_matches(Parity p, Index n) {
  return p == Parity::any || (p == Parity::even) == (n % 2 == 0);
}

}  // namespace

RangeResult verify_range(TheoremId id, Index lo, Index hi, Parity parity,
                         VariantSelection selection, const RefinePolicy& policy,
                         unsigned threads) {
  if (lo < 1 || lo > hi) {
    throw std::invalid_argument("verify_range requires 1 <= lo <= hi");
  }
  std::vector<Index> indices;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const auto idx = static_cast<Index>(n);
    if (admissible(id, idx) && parity_matches(parity, idx)) indices.push_back(idx);
  }
  RangeResult result;
  if (indices.empty()) {
    result.warnings.push_back("no admissible n in [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "] for theorem " + std::string(to_string(id)));
    return result;
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(indices.size()));

  std::vector<std::vector<Verdict>> slots(indices.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < indices.size(); i = next++) {
          try {
            slots[i] = verify_index(id, indices[i], policy);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& slot : slots) {
    std::sort(slot.begin(), slot.end(), [](const Verdict& a, const Verdict& b) {
      return a.variant < b.variant;
    });
    for (auto& v : slot) {
      if (selected(id, v.variant, selection)) result.verdicts.push_back(std::move(v));
    }
  }
  return result;
}

}  // namespace jacobsthal
