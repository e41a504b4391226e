#include "jacobsthal/sequence.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace jacobsthal {

JacInt::JacInt(Integer value) : value_(std::move(value)) {
  if (sgn(value_) < 0) {
    throw std::invalid_argument("JacInt must be nonnegative");
  }
}

SequenceCache::SequenceCache() {
  values_.emplace_back(0);
  values_.emplace_back(1);
}

const Integer& SequenceCache::get(Index n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  extend_to(n);
  std::shared_lock lock(mutex_);
  return values_[n];
}

std::size_t SequenceCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void SequenceCache::extend_to(Index n) {
  std::unique_lock lock(mutex_);
  while (values_.size() <= n) {
    const std::size_t k = values_.size();
    Integer next = values_[k - 1] + 2 * values_[k - 2];
#ifdef JACOBSTHAL_CROSS_CHECK
    if (next != jacobsthal_closed_form(static_cast<Index>(k))) {
      throw std::logic_error("recurrence and closed form disagree at n=" + std::to_string(k));
    }
#endif
    values_.push_back(std::move(next));
  }
}

SequenceCache& default_cache() {
  static SequenceCache cache;
  return cache;
}

const Integer& jacobsthal_ref(Index n) { return default_cache().get(n); }

JacInt jacobsthal(Index n) { return JacInt(default_cache().get(n)); }

Integer jacobsthal_closed_form(Index n) {
  Integer numerator = pow2(n) - parity_sign(n);
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), numerator.get_mpz_t(), 3);
  return q;
}

Integer jacobsthal_poly(Index n, const Integer& x) {
  if (n == 0) return 0;
  Integer prev = 0;
  Integer cur = 1;
  for (Index k = 2; k <= n; ++k) {
    Integer next = cur + x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<JacInt> jacobsthal_range(Index lo, Index hi) {
  if (lo > hi) {
    throw std::invalid_argument("jacobsthal_range: lo > hi");
  }
  std::vector<JacInt> out;
  out.reserve(hi - lo + 1);
  for (Index n = lo; n <= hi; ++n) {
    out.push_back(jacobsthal(n));
    if (n == hi) break;  // hi may be the max Index
  }
  return out;
}

}  // namespace jacobsthal
