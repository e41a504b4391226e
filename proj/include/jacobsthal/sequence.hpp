#pragma once

// Jacobsthal numbers J(0)=0, J(1)=1, J(n)=J(n-1)+2J(n-2), and integer
// evaluations of the Jacobsthal polynomials J(n; x)=J(n-1; x)+x J(n-2; x).

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <vector>

#include "jacobsthal/rational.hpp"

namespace jacobsthal {

using Index = std::uint32_t;

/// Arbitrary-precision nonnegative integer.
class JacInt {
 public:
  JacInt() = default;
  /// Throws std::invalid_argument for negative values.
  explicit JacInt(Integer value);

  const Integer& value() const { return value_; }
  std::string str() const { return value_.get_str(10); }

  friend bool operator==(const JacInt&, const JacInt&) = default;
  friend bool operator==(const JacInt& a, long b) { return a.value_ == b; }

 private:
  Integer value_{0};
};

/// Dense grow-only cache of J(0..n). Readers run concurrently; extension
/// takes an exclusive lock. Entries are never modified once appended, and
/// std::deque keeps references to them stable across growth.
class SequenceCache {
 public:
  SequenceCache();

  const Integer& get(Index n);
  std::size_t size() const;

 private:
  void extend_to(Index n);

  mutable std::shared_mutex mutex_;
  std::deque<Integer> values_;
};

/// Process-wide cache behind jacobsthal().
SequenceCache& default_cache();

JacInt jacobsthal(Index n);

/// Reference into the default cache; valid for the life of the process.
const Integer& jacobsthal_ref(Index n);

/// (2^n - (-1)^n) / 3, computed without the recurrence.
Integer jacobsthal_closed_form(Index n);

/// J(n; x) for integer x. J(n; 2) = J(n), J(n; 1) = F(n).
Integer jacobsthal_poly(Index n, const Integer& x);

/// [J(lo), ..., J(hi)]. Throws std::invalid_argument when lo > hi.
std::vector<JacInt> jacobsthal_range(Index lo, Index hi);

}  // namespace jacobsthal
