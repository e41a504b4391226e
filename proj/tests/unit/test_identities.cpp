#include <doctest.h>

#include "jacobsthal/identities.hpp"

namespace jacobsthal {

namespace {
Rat q(long p, long d) { return Rat(Integer(p), Integer(d)); }
}  // namespace

TEST_CASE("doubling identity J(n) + J(n+1) = 2^n") {
  auto r = check_lemma_1_1(3);
  CHECK(r.holds());
  CHECK(r.lhs == Rat(8));
  CHECK(check_lemma_1_1(1).holds());
  CHECK(check_lemma_1_1(10).holds());
  // n = 0 is outside the stated range but still computed.
  auto zero = check_lemma_1_1(0);
  CHECK(zero.outcome == Outcome::not_applicable);
  CHECK(zero.lhs == zero.rhs);
}

TEST_CASE("power-of-two bounds on J(n)") {
  auto three = check_lemma_1_2(3);
  for (const auto& r : three) CHECK(r.holds());
  CHECK(three[2].rhs == Rat(2));

  auto one = check_lemma_1_2(1);
  CHECK(one[0].holds());
  CHECK(one[0].lhs == Rat(1));
  CHECK(one[1].outcome == Outcome::not_applicable);
  CHECK(one[2].outcome == Outcome::not_applicable);

  auto two = check_lemma_1_2(2);
  CHECK(two[0].holds());
  CHECK(two[1].holds());
  CHECK(two[1].rhs == Rat(2));
  CHECK(two[2].outcome == Outcome::not_applicable);
}

TEST_CASE("Cassini-type identity") {
  auto a = check_cassini(2, 1);
  CHECK(a.holds());
  CHECK(a.lhs == Rat(2));
  auto b = check_cassini(3, 2);
  CHECK(b.holds());
  CHECK(b.lhs == Rat(2));
  for (Index n = 1; n <= 40; ++n) {
    auto r = check_cassini(n, n);
    CHECK(r.holds());
    CHECK(r.lhs == -Rat(Integer(jacobsthal(n).value() * jacobsthal(n).value())));
  }
  CHECK_THROWS_AS(check_cassini(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(check_cassini(3, 0), std::invalid_argument);
}

TEST_CASE("Cassini identity with k = 1") {
  for (Index n = 1; n <= 200; ++n) {
    CHECK(check_cassini(n, 1).holds());
    CHECK(check_cassini_k1(n).holds());
  }
}

TEST_CASE("product and sum-of-squares identities") {
  CHECK(check_lemma_1_4(2).lhs == Rat(8));
  CHECK(check_lemma_1_4(1).lhs == Rat(0));
  auto six = check_lemma_1_4(6);
  CHECK(six.holds());
  CHECK(six.lhs == Rat(1408));
  CHECK_THROWS_AS(check_lemma_1_4(0), std::invalid_argument);

  auto r3 = check_lemma_1_5(3);
  CHECK(r3.holds());
  CHECK(r3.rhs == Rat(43));
  CHECK(check_lemma_1_5(1).rhs == Rat(3));
  CHECK(check_lemma_1_5(4).rhs == Rat(171));
}

TEST_CASE("differencing inequality for reciprocal tails") {
  auto one = check_step_2_1(1);
  CHECK(one.holds());
  CHECK(one.lhs == Rat(2));
  auto two = check_step_2_1(2);
  CHECK(two.holds());
  CHECK(two.lhs == Rat(28));
  CHECK(check_step_2_1(5).holds());
  CHECK_THROWS_AS(check_step_2_1(0), std::invalid_argument);
}

TEST_CASE("alternating sign of the reciprocal-squared difference") {
  auto three = check_step_2_2(3);
  CHECK(three.holds());
  CHECK(three.lhs == q(172, 2475));
  CHECK(three.rhs == q(172, 2475));

  auto four = check_step_2_2(4);
  CHECK(four.holds());
  CHECK(four.lhs.sign() < 0);
  auto five = check_step_2_2(5);
  CHECK(five.holds());
  CHECK(five.lhs.sign() > 0);

  for (Index n = 3; n <= 60; ++n) CHECK(check_step_2_2(n).lhs.sign() == parity_sign(n - 1));

  CHECK(check_step_2_2(2).outcome == Outcome::not_applicable);
  CHECK_THROWS_AS(check_step_2_2(1), std::invalid_argument);
}

TEST_CASE("alternating numerator M collapses to a sign") {
  CHECK(check_M(2).lhs == Rat(1));
  CHECK(check_M(3).lhs == Rat(-1));
  CHECK(check_M(10).lhs == Rat(1));
  CHECK(check_M(1).lhs == Rat(-1));
  for (Index n = 1; n <= 100; ++n) {
    auto r = check_M(n);
    CHECK(r.holds());
    CHECK(r.lhs.sign() == parity_sign(n));
  }
}

TEST_CASE("alternating-squares numerator N is negative") {
  auto five = check_N_sign(5);
  CHECK(five.holds());
  CHECK(five.lhs == Rat(-3201));
  auto two = check_N_sign(2);
  CHECK(two.lhs == Rat(1));
  CHECK(two.outcome == Outcome::not_applicable);
  CHECK(check_N_sign(1).lhs == Rat(-1));
  for (Index n = 1; n <= 80; ++n) CHECK(alt_sq_N_expansion(n) == alt_sq_N_substituted(n));
  CHECK_THROWS_AS(check_N_sign(0), std::invalid_argument);
}

TEST_CASE("identity_sweep is complete and ordered") {
  const auto rows = identity_sweep(20, 6);
  // 11 single-index checks per n for n = 1..20, minus step2.2 at n = 1,
  // plus 21 Cassini pairs.
  CHECK(rows.size() == 11 * 20 - 1 + 21);
  for (const auto& r : rows) CHECK(r.outcome != Outcome::fails);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    CHECK((a.id < b.id || (a.id == b.id && (a.n < b.n || (a.n == b.n && a.k < b.k)))));
  }
}

}  // namespace jacobsthal
