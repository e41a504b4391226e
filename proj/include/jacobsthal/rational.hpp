#pragma once

// Exact rationals and rational intervals.
//
// Rat is always held in lowest terms with a positive denominator (zero is
// 0/1). Every comparison here is exact; nothing in the decision path goes
// through floating point.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jacobsthal {

using Integer = mpz_class;

/// 2^e as an exact integer.
Integer pow2(unsigned long e);

/// (-1)^e as +1 or -1.
inline int parity_sign(unsigned long e) { return (e % 2 == 0) ? 1 : -1; }

std::string to_string(const Integer& z);

class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const Integer& z) : q_(z) {}
  /// Throws std::domain_error when den == 0.
  Rat(const Integer& num, const Integer& den);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Rounds toward -inf.
  Integer floor() const;
  /// Rounds toward +inf.
  Integer ceil() const;

  Rat abs() const;
  /// Throws std::domain_error on zero.
  Rat reciprocal() const;

  /// "p/q", with "/q" omitted when q == 1.
  std::string str() const;
  /// Nearest double; for display and tests only.
  double to_double() const { return q_.get_d(); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Parses "p/q", an integer, or a decimal such as "0.001", "-2.5e-3", "1e-12"
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rat parse_rational(std::string_view text);

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed interval [lo, hi] with lo <= hi.
class RatInterval {
 public:
  /// Throws std::invalid_argument when lo > hi.
  RatInterval(Rat lo, Rat hi);
  static RatInterval point(const Rat& v) { return {v, v}; }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const { return (lo_ + hi_) / Rat(2); }

  bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  /// True when every point is strictly positive or every point strictly negative.
  bool excludes_zero() const { return lo_.sign() > 0 || hi_.sign() < 0; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend RatInterval operator+(const RatInterval& a, const Rat& b) {
    return {a.lo_ + b, a.hi_ + b};
  }
  friend bool operator==(const RatInterval&, const RatInterval&) = default;

 private:
  Rat lo_;
  Rat hi_;
};

/// [1/hi, 1/lo]. Throws NotInvertible when the interval touches zero.
RatInterval interval_reciprocal(const RatInterval& iv);

/// The common floor (or ceiling) of both endpoints, or nullopt when the
/// endpoints round to different integers.
std::optional<Integer> floor_decide(const RatInterval& iv);
std::optional<Integer> ceil_decide(const RatInterval& iv);

enum class Rounding { floor, ceil };

std::optional<Integer> round_decide(const RatInterval& iv, Rounding mode);
std::string_view to_string(Rounding mode);

}  // namespace jacobsthal
