// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "jacobsthal/identities.hpp"
#include "jacobsthal/series.hpp"
#include "jacobsthal/theorems.hpp"
#include "oracle/series_oracle.hpp"

using namespace jacobsthal;

namespace {

// Collects the first few mismatches so a FAIL line says what went wrong.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) text_ << (count_ > 1 ? "; " : "") << what;
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " failure(s): " << text_.str();
    return s.str();
  }

 private:
  int count_ = 0;
  std::ostringstream text_;
};

std::string at(const IdentityResult& r) {
  std::ostringstream s;
  s << identity_name(r.id) << " n=" << r.n;
  if (r.k) s << " k=" << *r.k;
  return s.str();
}

std::string at(const Verdict& v) {
  std::ostringstream s;
  s << to_string(v.theorem) << '/' << to_string(v.variant) << " n=" << v.n << ' '
    << to_string(v.status);
  if (v.decided) s << " decided=" << v.decided->get_str();
  return s.str();
}

bool decided_is(const Verdict& v, const Integer& value) { return v.decided && *v.decided == value; }

void require_holds(Failures& f, const IdentityResult& r) {
  if (!r.holds()) f.add(at(r));
}

// ---------------------------------------------------------------------------

Failures identity_sweep_criterion() {
  Failures f;
  for (Index n = 1; n <= 512; ++n) {
    require_holds(f, check_lemma_1_1(n));
    require_holds(f, check_lemma_1_4(n));
    require_holds(f, check_lemma_1_5(n));
    const auto bounds = check_lemma_1_2(n);
    // Each bound applies from its own lower index: 1, 2 and 3.
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (n >= i + 1) {
        require_holds(f, bounds[i]);
      } else if (bounds[i].outcome != Outcome::not_applicable) {
        f.add(at(bounds[i]) + " should be out of range");
      }
    }
  }
  for (Index n = 1; n <= 128; ++n) {
    for (Index k = 1; k <= n; ++k) require_holds(f, check_cassini(n, k));
  }
  return f;
}

Failures proof_step_criterion() {
  Failures f;
  for (Index n = 1; n <= 256; ++n) {
    const auto step = check_step_2_1(n);
    require_holds(f, step);
    if (step.lhs.sign() <= 0) f.add(at(step) + " not positive");
  }
  for (Index n = 3; n <= 128; ++n) require_holds(f, check_step_2_2(n));
  const auto three = check_step_2_2(3);
  const Rat spot(Integer(172), Integer(2475));
  if (three.lhs != spot || three.rhs != spot) {
    f.add("step2.2 n=3 gives " + three.lhs.str() + " and " + three.rhs.str());
  }
  for (Index n = 1; n <= 256; ++n) {
    const auto m = check_M(n);
    require_holds(f, m);
    if (m.lhs != Rat(parity_sign(n))) f.add(at(m) + " is " + m.lhs.str());
  }
  for (Index n = 5; n <= 128; ++n) {
    const auto r = check_N_sign(n);
    require_holds(f, r);
    if (r.lhs.sign() >= 0) f.add(at(r) + " not negative");
  }
  return f;
}

Failures reciprocal_bounds_criterion() {
  Failures f;
  for (const auto& v : verify_range(TheoremId::thm2_1, 2, 200, Parity::any).verdicts) {
    if (v.status != Status::verified) f.add(at(v));
  }
  for (Index n = 3; n <= 200; ++n) {
    const auto v = verify_thm_2_1_bound(n);
    if (v.status != Status::verified) f.add("combined bound " + at(v));
  }
  return f;
}

Failures alternating_floor_criterion() {
  Failures f;
  Index count = 0;
  for (Index n = 2; n <= 128; n += 2) {
    const auto p = verify_thm_3_1(n);
    ++count;
    if (p.proof_implied.status != Status::verified ||
        !decided_is(p.proof_implied, pow2(n - 1) - 1)) {
      f.add(at(p.proof_implied));
    }
  }
  if (count != 64) f.add("swept " + std::to_string(count) + " indices");
  if (!decided_is(verify_thm_3_1(2).proof_implied, 1)) f.add("n=2 floor is not 1");
  const auto four = verify_thm_3_1(4);
  if (!decided_is(four.proof_implied, 7)) f.add("n=4 floor is not 7");
  // Squared reading: the independent oracle gives floor 29 at n = 4.
  if (four.stated.status != Status::refuted || !decided_is(four.stated, 29) ||
      !four.stated.discrepancy || !four.proof_implied.discrepancy) {
    f.add("squared reading at n=4: " + at(four.stated));
  }
  return f;
}

Failures reciprocal_squared_criterion() {
  Failures f;
  for (Index n = 3; n <= 127; n += 2) {
    const auto p = verify_thm_2_2(n);
    if (p.proof_implied.status != Status::verified) f.add(at(p.proof_implied));
    // The oracle refutes the printed direction at every odd n >= 3 in range.
    if (p.stated.status != Status::refuted || !p.stated.discrepancy) f.add(at(p.stated));
  }
  const auto one = verify_thm_2_2(1);
  if (one.proof_implied.status != Status::verified || !decided_is(one.proof_implied, 0)) {
    f.add(at(one.proof_implied));
  }
  const auto three = verify_thm_2_2(3);
  if (!decided_is(three.stated, 6) || !three.stated.expected || *three.stated.expected != 3) {
    f.add("n=3 stated: " + at(three.stated));
  }
  return f;
}

Failures odd_alternating_criterion() {
  Failures f;
  const auto range = verify_range(TheoremId::cor3_2, 1, 127, Parity::odd);
  if (range.verdicts.size() != 64) f.add(std::to_string(range.verdicts.size()) + " verdicts");
  for (const auto& v : range.verdicts) {
    if (v.status != Status::verified) f.add(at(v));
  }
  if (!decided_is(verify_cor_3_2(3), -6)) f.add("n=3 floor is not -6");
  return f;
}

Failures alternating_squares_criterion() {
  Failures f;
  const auto range = verify_range(TheoremId::thm3_3, 1, 128, Parity::any);
  if (range.verdicts.size() != 128) f.add(std::to_string(range.verdicts.size()) + " verdicts");
  for (const auto& v : range.verdicts) {
    const Status want = v.n == 2 ? Status::refuted : Status::verified;
    if (v.status != want) f.add(at(v));
  }
  return f;
}

Failures enclosure_soundness_criterion() {
  Failures f;
  constexpr Family families[] = {Family::recip, Family::recip_squared, Family::alt_recip,
                                 Family::alt_recip_squared};
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 200; ++trial) {
    const Family family = families[rng() % 4];
    const Index start = 1 + static_cast<Index>(rng() % 40);
    const SeriesSpec spec(family, start);
    const Index lo = tail_threshold(spec);
    const Index k = lo + static_cast<Index>(rng() % (200 - lo + 1));

    const auto enc = enclosure_at(spec, k);
    const mpfr_prec_t bits = 10 * k + 512;
    oracle::Real reference(bits);
    oracle::truncated_sum(reference, family, start, 4 * k, bits);
    std::ostringstream where;
    where << to_string(family) << " start=" << start << " K=" << k;
    if (!oracle::inside(enc.interval, reference)) f.add(where.str() + " excludes truncation");

    const auto narrow = enclose_sum(spec, parse_rational("1e-13"));
    const double mid = narrow.enclosure.interval.midpoint().to_double();
    const double plain = oracle::double_sum(family, start, 200);
    if (!narrow.goal_met || std::fabs(mid - plain) > 1e-12) {
      f.add(where.str() + " midpoint off by " + std::to_string(std::fabs(mid - plain)));
    }
  }
  return f;
}

struct Captured {
  int code = -1;
  std::string out;
};

Captured run_cli(const std::string& args) {
  Captured c;
  const std::string command = std::string(JACOBSTHAL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) c.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) c.code = WEXITSTATUS(status);
  return c;
}

Failures determinism_criterion() {
  Failures f;
  const std::string sweep = "verify --theorem 3.1 --from 2 --to 64 --format json";
  const auto a = run_cli(sweep);
  const auto b = run_cli(sweep);
  if (a.out.empty() || a.out != b.out) f.add("two sweeps differ");
  if (a.code != 0 || b.code != 0) f.add("verified sweep exited " + std::to_string(a.code));

  const auto refuted = run_cli("verify --theorem 3.3 --from 1 --to 8");
  if (refuted.code != 2) f.add("refuting sweep exited " + std::to_string(refuted.code));

  const auto capped = run_cli("verify --theorem 3.1 --from 64 --to 64 --max-terms 9");
  if (capped.code != 3) f.add("capped run exited " + std::to_string(capped.code));
  return f;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Failures()> run;
  };
  const Criterion criteria[] = {
      {"identity sweep (n <= 512, Cassini k <= n <= 128)", identity_sweep_criterion},
      {"proof-step equalities and signs", proof_step_criterion},
      {"reciprocal tail inverse bounds (2 <= n <= 200)", reciprocal_bounds_criterion},
      {"alternating tail floor 2^(n-1) - 1 (even n <= 128)", alternating_floor_criterion},
      {"reciprocal-squared tail bound (odd n <= 127)", reciprocal_squared_criterion},
      {"odd-index alternating floor bound (odd n <= 127)", odd_alternating_criterion},
      {"alternating-squares ceiling sweep (n <= 128)", alternating_squares_criterion},
      {"enclosure soundness (200 random triples)", enclosure_soundness_criterion},
      {"CLI determinism and exit codes", determinism_criterion},
  };

  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto begin = std::chrono::steady_clock::now();
    Failures result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.add(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - begin)
                        .count();
    std::cout << (result.empty() ? "PASS" : "FAIL") << ' ' << index << ' ' << c.name << " ["
              << ms << " ms]";
    if (!result.empty()) {
      std::cout << ": " << result.summary();
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
