#include "jacobsthal/rational.hpp"

#include <cctype>

namespace jacobsthal {

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Integer Rat::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rat::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::reciprocal() const {
  if (sign() == 0) {
    throw std::domain_error("reciprocal of zero");
  }
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rat(std::move(r));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.sign() == 0) {
    throw std::domain_error("division by zero");
  }
  q_ /= o.q_;
  return *this;
}

std::string Rat::str() const {
  if (is_integer()) {
    return q_.get_num().get_str(10);
  }
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed integer");
  }
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("malformed rational denominator");
    }
    const Integer den(std::string(den_text), 10);
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    return Rat(num, den);
  }

  bool negative = false;
  std::string_view s = text;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw std::invalid_argument("malformed exponent");
    }
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed decimal");
    }
    digits = std::string(s);
  }

  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    return Rat(Integer(mantissa * scale), Integer(1));
  }
  return Rat(mantissa, scale);
}

RatInterval::RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw std::invalid_argument("interval with lo > hi");
  }
}

RatInterval interval_reciprocal(const RatInterval& iv) {
  if (!iv.excludes_zero()) {
    throw NotInvertible("interval [" + iv.lo().str() + ", " + iv.hi().str() + "] contains zero");
  }
  return {iv.hi().reciprocal(), iv.lo().reciprocal()};
}

std::optional<Integer> floor_decide(const RatInterval& iv) {
  Integer a = iv.lo().floor();
  if (a == iv.hi().floor()) return a;
  return std::nullopt;
}

std::optional<Integer> ceil_decide(const RatInterval& iv) {
  Integer a = iv.lo().ceil();
  if (a == iv.hi().ceil()) return a;
  return std::nullopt;
}

std::optional<Integer> round_decide(const RatInterval& iv, Rounding mode) {
  return mode == Rounding::floor ? floor_decide(iv) : ceil_decide(iv);
}

std::string_view to_string(Rounding mode) {
  return mode == Rounding::floor ? "floor" : "ceil";
}

}  // namespace jacobsthal
