#include "jacobsthal/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "jacobsthal/identities.hpp"
#include "jacobsthal/report.hpp"
#include "jacobsthal/sequence.hpp"
#include "jacobsthal/series.hpp"
#include "jacobsthal/theorems.hpp"

namespace jacobsthal::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";

  Index seq_from = 0;
  Index seq_to = 0;
  std::string poly_x = "2";

  Index identities_to = 64;
  Index cassini_max = 16;

  std::string family;
  Index start = 1;
  std::string width = "1e-12";
  std::string decide;

  std::string theorem;
  Index from = 1;
  Index to = 1;
  std::string parity = "any";
  std::string variant = "auto";
  Index max_terms = RefinePolicy::kDefaultMaxTerms;
  unsigned threads = 0;
};

const std::vector<std::string> kFormats{"json", "csv", "plain"};

int exit_for(bool refuted, bool undecided) {
  if (refuted) return kExitRefuted;
  if (undecided) return kExitUndecided;
  return kExitOk;
}

int run_seq(const Options& o, bool poly, std::ostream& out) {
  if (o.seq_from > o.seq_to) throw UsageError("--from must not exceed --to");
  Integer x;
  if (poly) {
    if (x.set_str(o.poly_x, 10) != 0) throw UsageError("--x must be an integer");
  }
  std::vector<ReportRow> rows;
  if (poly) {
    for (std::uint64_t n = o.seq_from; n <= o.seq_to; ++n) {
      const auto idx = static_cast<Index>(n);
      rows.emplace_back(SequenceRow{idx, x, jacobsthal_poly(idx, x)});
    }
  } else {
    Index n = o.seq_from;
    for (auto& j : jacobsthal_range(o.seq_from, o.seq_to)) {
      rows.emplace_back(SequenceRow{n++, Integer(2), j.value()});
    }
  }
  sort_rows(rows);
  emit_report(out, RowKind::sequence, rows, parse_format(o.format));
  return kExitOk;
}

int run_identities(const Options& o, std::ostream& out) {
  if (o.identities_to < 1) throw UsageError("--to must be >= 1");
  std::vector<ReportRow> rows;
  bool failed = false;
  for (auto& r : identity_sweep(o.identities_to, o.cassini_max)) {
    failed = failed || r.outcome == Outcome::fails;
    rows.emplace_back(std::move(r));
  }
  sort_rows(rows);
  emit_report(out, RowKind::identity, rows, parse_format(o.format));
  return exit_for(failed, false);
}

int run_sum(const Options& o, std::ostream& out) {
  if (o.start < 1) throw UsageError("--start must be >= 1");
  const Family family = parse_family(o.family);
  const SeriesSpec spec(family, o.start);
  const RefinePolicy policy{o.max_terms};

  Rat width;
  try {
    width = parse_rational(o.width);
  } catch (const std::invalid_argument&) {
    throw UsageError("--width must be a positive decimal such as 1e-12");
  }
  if (width.sign() <= 0) throw UsageError("--width must be positive");

  std::vector<ReportRow> rows;
  bool undecided = false;
  if (o.decide.empty()) {
    auto r = enclose_sum(spec, width, policy);
    undecided = !r.goal_met;
    rows.emplace_back(SumRow{std::move(r.enclosure), r.goal_met, std::nullopt, std::nullopt,
                             std::nullopt});
  } else {
    const Rounding mode = o.decide == "floor" ? Rounding::floor : Rounding::ceil;
    auto r = enclose_inverse(spec, mode, policy);
    undecided = r.status != DecideStatus::decided;
    rows.emplace_back(SumRow{std::move(r.sum), !undecided, mode, std::move(r.inverse),
                             std::move(r.decided)});
  }
  emit_report(out, RowKind::sum, rows, parse_format(o.format));
  return exit_for(false, undecided);
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.from < 1 || o.from > o.to) throw UsageError("require 1 <= --from <= --to");
  const TheoremId id = parse_theorem(o.theorem);
  RangeResult result = verify_range(id, o.from, o.to, parse_parity(o.parity),
                                    parse_variant_selection(o.variant),
                                    RefinePolicy{o.max_terms}, o.threads);
  for (const auto& w : result.warnings) err << "warning: " << w << '\n';

  bool refuted = false;
  bool undecided = false;
  std::vector<ReportRow> rows;
  for (auto& v : result.verdicts) {
    refuted = refuted || v.status == Status::refuted;
    undecided = undecided || v.status == Status::undecided;
    rows.emplace_back(std::move(v));
  }
  sort_rows(rows);
  emit_report(out, RowKind::verdict, rows, parse_format(o.format));
  return exit_for(refuted, undecided);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jacobsthal sequence, identity and reciprocal-series verification",
               "jacobsthal"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember(kFormats))
        ->capture_default_str();
  };

  auto* seq = app.add_subcommand("seq", "Jacobsthal numbers J(from..to)");
  seq->add_option("--from", o.seq_from, "First index")->capture_default_str();
  seq->add_option("--to", o.seq_to, "Last index")->required();
  add_format(seq);

  auto* poly = app.add_subcommand("poly", "Jacobsthal polynomial values J(n; x), n = from..to");
  poly->add_option("--x", o.poly_x, "Integer argument")->capture_default_str();
  poly->add_option("--from", o.seq_from, "First index")->capture_default_str();
  poly->add_option("--to", o.seq_to, "Last index")->required();
  add_format(poly);

  auto* ids = app.add_subcommand("identities", "Exact identity and proof-step sweep");
  ids->add_option("--to", o.identities_to, "Largest n")->capture_default_str();
  ids->add_option("--cassini-max", o.cassini_max, "Cassini sweep over 1 <= k <= n <= M")
      ->capture_default_str();
  add_format(ids);

  auto* sum = app.add_subcommand("sum", "Rigorous enclosure of one reciprocal series");
  sum->add_option("--family", o.family, "Series family")
      ->required()
      ->check(CLI::IsMember({"recip", "recip-squared", "alt-recip", "alt-recip-squared"}));
  sum->add_option("--start", o.start, "Start index n >= 1")->required();
  sum->add_option("--width", o.width, "Target enclosure width (decimal)")->capture_default_str();
  sum->add_option("--decide", o.decide, "Also decide floor/ceil of the inverse")
      ->check(CLI::IsMember({"floor", "ceil"}));
  sum->add_option("--max-terms", o.max_terms, "Cap on summed terms")->capture_default_str();
  add_format(sum);

  auto* verify = app.add_subcommand("verify", "Decide a theorem for each n in a range");
  verify->add_option("--theorem", o.theorem, "Theorem id")
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "3.1", "3.2", "3.3"}));
  verify->add_option("--from", o.from, "First n")->required();
  verify->add_option("--to", o.to, "Last n")->required();
  verify->add_option("--parity", o.parity, "Parity filter")
      ->check(CLI::IsMember({"any", "even", "odd"}))
      ->capture_default_str();
  verify->add_option("--variant", o.variant, "Reading(s) to report")
      ->check(CLI::IsMember({"auto", "stated", "proof-implied", "all"}))
      ->capture_default_str();
  verify->add_option("--max-terms", o.max_terms, "Cap on summed terms")->capture_default_str();
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  add_format(verify);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*seq) return run_seq(o, false, out);
    if (*poly) return run_seq(o, true, out);
    if (*ids) return run_identities(o, out);
    if (*sum) return run_sum(o, out);
    if (*verify) return run_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace jacobsthal::cli
