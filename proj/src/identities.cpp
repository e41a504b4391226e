#include "jacobsthal/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jacobsthal {

namespace {

const Integer& J(Index n) { return jacobsthal_ref(n); }

Rat R(const Integer& z) { return Rat(z); }

bool relation_holds(const Rat& lhs, Relation rel, const Rat& rhs) {
  switch (rel) {
    case Relation::eq: return lhs == rhs;
    case Relation::lt: return lhs < rhs;
    case Relation::gt: return lhs > rhs;
  }
  return false;
}

IdentityResult make(IdentityId id, Index n, std::optional<Index> k, Rat lhs, Relation rel,
                    Rat rhs, bool in_range) {
  Outcome outcome = Outcome::not_applicable;
  if (in_range) {
    outcome = relation_holds(lhs, rel, rhs) ? Outcome::holds : Outcome::fails;
  }
  return IdentityResult{id, n, k, rel, outcome, std::move(lhs), std::move(rhs)};
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::lemma1_1: return "lemma1.1";
    case IdentityId::lemma1_2a: return "lemma1.2a";
    case IdentityId::lemma1_2b: return "lemma1.2b";
    case IdentityId::lemma1_2c: return "lemma1.2c";
    case IdentityId::cassini: return "lemma1.3";
    case IdentityId::cassini_k1: return "lemma1.3-k1";
    case IdentityId::lemma1_4: return "lemma1.4";
    case IdentityId::lemma1_5: return "lemma1.5";
    case IdentityId::step2_1: return "step2.1";
    case IdentityId::step2_2: return "step2.2";
    case IdentityId::alt_M: return "thm3.1-M";
    case IdentityId::alt_sq_N: return "thm3.3-N";
  }
  return "?";
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::lt: return "<";
    case Relation::gt: return ">";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::not_applicable: return "not-applicable";
  }
  return "?";
}

IdentityResult check_lemma_1_1(Index n) {
  return make(IdentityId::lemma1_1, n, std::nullopt, R(J(n) + J(n + 1)), Relation::eq,
              R(pow2(n)), n >= 1);
}

std::array<IdentityResult, 3> check_lemma_1_2(Index n) {
  const Rat jn = R(J(n));
  // 2^(n-1) and 2^(n-2) are fractions for small n.
  const Rat half_power = Rat(pow2(n), Integer(2));
  const Rat quarter_power = Rat(pow2(n), Integer(4));
  return {
      make(IdentityId::lemma1_2a, n, std::nullopt, jn, Relation::lt, R(pow2(n)), n >= 1),
      make(IdentityId::lemma1_2b, n, std::nullopt, jn, Relation::lt, half_power, n >= 2),
      make(IdentityId::lemma1_2c, n, std::nullopt, jn, Relation::gt, quarter_power, n >= 3),
  };
}

IdentityResult check_cassini(Index n, Index k) {
  require(k >= 1 && k <= n, "check_cassini requires 1 <= k <= n");
  const Integer lhs = J(n + k) * J(n - k) - J(n) * J(n);
  const Integer rhs = parity_sign(n - k + 1) * pow2(n - k) * J(k) * J(k);
  return make(IdentityId::cassini, n, k, R(lhs), Relation::eq, R(rhs), true);
}

IdentityResult check_cassini_k1(Index n) {
  require(n >= 1, "check_cassini_k1 requires n >= 1");
  const Integer lhs = J(n - 1) * J(n + 1) - J(n) * J(n);
  const Integer rhs = parity_sign(n) * pow2(n - 1);
  return make(IdentityId::cassini_k1, n, std::nullopt, R(lhs), Relation::eq, R(rhs), true);
}

IdentityResult check_lemma_1_4(Index n) {
  require(n >= 1, "check_lemma_1_4 requires n >= 1");
  const Integer lhs = J(n + 1) * J(n + 1) - J(n) * J(n);
  const Integer rhs = pow2(n + 1) * J(n - 1);
  return make(IdentityId::lemma1_4, n, std::nullopt, R(lhs), Relation::eq, R(rhs), true);
}

IdentityResult check_lemma_1_5(Index n) {
  const Integer lhs = J(n + 1) * J(n + 1) + 2 * J(n) * J(n);
  return make(IdentityId::lemma1_5, n, std::nullopt, R(lhs), Relation::eq, R(J(2 * n + 1)),
              n >= 1);
}

IdentityResult check_step_2_1(Index n) {
  require(n >= 1, "check_step_2_1 requires n >= 1");
  const Integer diff = J(n + 1) * J(n + 3) - J(n) * J(n + 2);
  auto result = make(IdentityId::step2_1, n, std::nullopt, R(diff), Relation::gt, Rat(0), true);
  const Rat lhs = Rat(Integer(1), J(n));
  const Rat rhs = Rat(Integer(2), J(n + 2)) + Rat(Integer(1), J(n + 3));
  if (result.holds() && !(lhs > rhs)) {
    result.outcome = Outcome::fails;
  }
  return result;
}

IdentityResult check_step_2_2(Index n) {
  require(n >= 2, "check_step_2_2 requires n >= 2 (J(n-1) in a denominator)");
  const Integer& a = J(n - 1);
  const Integer& b = J(n);
  const Integer& c = J(n + 1);
  const Integer& d = J(n + 2);
  const Rat lhs = Rat(Integer(1), a * b) - Rat(Integer(1), b * b) - Rat(Integer(2), c * c) -
                  Rat(Integer(4), c * d);
  const Integer num = parity_sign(n - 1) * pow2(n - 1) * J(2 * n + 1);
  const Integer den = a * b * b * c * c * d;
  return make(IdentityId::step2_2, n, std::nullopt, lhs, Relation::eq, Rat(num, den), n >= 3);
}

IdentityResult check_M(Index n) {
  require(n >= 1, "check_M requires n >= 1");
  const int s = parity_sign(n);
  const Integer m =
      -s * J(n - 1) * J(n + 1) + J(n + 1) - J(n - 1) + s * J(n) * J(n) + s;
  return make(IdentityId::alt_M, n, std::nullopt, R(m), Relation::eq, Rat(s), true);
}

Integer alt_sq_N_expansion(Index n) {
  require(n >= 1, "N requires n >= 1");
  const int s = parity_sign(n);
  const Integer a2 = J(n - 1) * J(n - 1);
  const Integer b2 = J(n) * J(n);
  const Integer c2 = J(n + 1) * J(n + 1);
  return -s * a2 * c2 + c2 - a2 + s * b2 * b2 + s;
}

Integer alt_sq_N_substituted(Index n) {
  require(n >= 1, "N requires n >= 1");
  const int s = parity_sign(n);
  const Integer b2 = J(n) * J(n);
  return pow2(n + 1) * J(n - 1) + b2 - s * pow2(2 * n - 2) - J(n - 1) * J(n - 1) -
         pow2(n) * b2 + s;
}

IdentityResult check_N_sign(Index n) {
  const Integer expanded = alt_sq_N_expansion(n);
  if (expanded != alt_sq_N_substituted(n)) {
    throw std::logic_error("N expansion and substituted form disagree at n=" + std::to_string(n));
  }
  return make(IdentityId::alt_sq_N, n, std::nullopt, R(expanded), Relation::lt, Rat(0), n >= 5);
}

std::vector<IdentityResult> identity_sweep(Index n_max, Index cassini_max) {
  std::vector<IdentityResult> out;
  for (Index n = 1; n <= n_max; ++n) {
    out.push_back(check_lemma_1_1(n));
    for (auto& r : check_lemma_1_2(n)) out.push_back(std::move(r));
    out.push_back(check_cassini_k1(n));
    out.push_back(check_lemma_1_4(n));
    out.push_back(check_lemma_1_5(n));
    out.push_back(check_step_2_1(n));
    if (n >= 2) out.push_back(check_step_2_2(n));
    out.push_back(check_M(n));
    out.push_back(check_N_sign(n));
  }
  for (Index n = 1; n <= cassini_max; ++n) {
    for (Index k = 1; k <= n; ++k) out.push_back(check_cassini(n, k));
  }
  std::stable_sort(out.begin(), out.end(), [](const IdentityResult& a, const IdentityResult& b) {
    if (a.id != b.id) return a.id < b.id;
    if (a.n != b.n) return a.n < b.n;
    return a.k.value_or(0) < b.k.value_or(0);
  });
  return out;
}

}  // namespace jacobsthal
