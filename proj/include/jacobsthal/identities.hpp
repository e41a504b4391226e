#pragma once

// Exact checks of the finite Jacobsthal identities and of the algebraic
// steps used to bound the reciprocal series. No tolerances: each check
// compares normalized rationals.
//
// Checks evaluated outside the index range their identity is stated for
// return Outcome::not_applicable, with lhs and rhs still recorded. Indices
// where an expression is undefined (a zero denominator, J(-1)) throw
// std::invalid_argument.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "jacobsthal/rational.hpp"
#include "jacobsthal/sequence.hpp"

namespace jacobsthal {

enum class IdentityId {
  lemma1_1,     // J(n) + J(n+1) = 2^n
  lemma1_2a,    // J(n) < 2^n, n >= 1
  lemma1_2b,    // J(n) < 2^(n-1), n >= 2
  lemma1_2c,    // 2^(n-2) < J(n), n >= 3 (upper half is lemma1_2b)
  cassini,      // J(n+k)J(n-k) - J(n)^2 = (-1)^(n-k+1) 2^(n-k) J(k)^2
  cassini_k1,   // J(n-1)J(n+1) - J(n)^2 = (-1)^n 2^(n-1)
  lemma1_4,     // J(n+1)^2 - J(n)^2 = 2^(n+1) J(n-1)
  lemma1_5,     // J(n+1)^2 + 2 J(n)^2 = J(2n+1)
  step2_1,      // J(n+1)J(n+3) - J(n)J(n+2) > 0
  step2_2,      // four-term difference = (-1)^(n-1) 2^(n-1) J(2n+1) / (...)
  alt_M,        // M = (-1)^n
  alt_sq_N,     // N < 0 for n >= 5
};

std::string_view identity_name(IdentityId id);

enum class Relation { eq, lt, gt };
enum class Outcome { holds, fails, not_applicable };

std::string_view to_string(Relation r);
std::string_view to_string(Outcome o);

struct IdentityResult {
  IdentityId id;
  Index n;
  std::optional<Index> k;
  Relation relation;
  Outcome outcome;
  Rat lhs;
  Rat rhs;

  bool holds() const { return outcome == Outcome::holds; }
};

IdentityResult check_lemma_1_1(Index n);
std::array<IdentityResult, 3> check_lemma_1_2(Index n);
/// Requires 1 <= k <= n.
IdentityResult check_cassini(Index n, Index k);
IdentityResult check_cassini_k1(Index n);
IdentityResult check_lemma_1_4(Index n);
IdentityResult check_lemma_1_5(Index n);
/// Holds iff the product difference is positive and, independently,
/// 1/J(n) > 2/J(n+2) + 1/J(n+3).
IdentityResult check_step_2_1(Index n);
/// Applicable for n >= 3; n = 2 is computed and flagged; n < 2 throws.
IdentityResult check_step_2_2(Index n);
IdentityResult check_M(Index n);
/// The substituted form of N is checked against its expansion; a mismatch
/// throws std::logic_error.
IdentityResult check_N_sign(Index n);

/// Direct expansion and substituted form of N, exposed for tests.
Integer alt_sq_N_expansion(Index n);
Integer alt_sq_N_substituted(Index n);

/// Every check above for 1 <= n <= n_max, and Cassini for
/// 1 <= k <= n <= cassini_max. Sorted by (identity, n, k).
std::vector<IdentityResult> identity_sweep(Index n_max, Index cassini_max);

}  // namespace jacobsthal
