#include "cli.hpp"

#include "fermatlab/bench.hpp"
#include "fermatlab/context.hpp"
#include "fermatlab/errors.hpp"
#include "fermatlab/region.hpp"
#include "fermatlab/sieve.hpp"
#include "fermatlab/solvers.hpp"
#include "fermatlab/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

namespace fermatlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct FactorOptions {
  std::string n;
  std::string method = "both";
  std::string alpha_start;
  std::string direction = "asc";
  std::uint64_t max_iter = kDefaultMaxIterations;
  bool json = false;
};

struct AnalyzeOptions {
  std::string n;
  std::string p;
  std::string q;
  std::string mode = "paper";
  bool json = false;
};

struct BenchOptions {
  unsigned bits = 0;
  std::size_t count = 0;
  std::string ratio_min = "1";
  std::string ratio_max = "2";
  std::uint64_t seed = 1;
  std::uint64_t max_iter = kDefaultMaxIterations;
  unsigned threads = 1;
  std::string out;
};

ExactRational parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(parse_natural(text));
  const Natural den = parse_natural(std::string_view(text).substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("ratio '" + text + "' has a zero denominator");
  return ExactRational(parse_natural(std::string_view(text).substr(0, slash)), den);
}

struct TimedOutcome {
  SolveOutcome outcome;
  std::chrono::nanoseconds elapsed;
};

Json outcome_json(const TimedOutcome& t) {
  const SolveOutcome& o = t.outcome;
  Json j;
  j["method"] = to_string(o.method);
  j["status"] = to_string(o.status);
  j["iterations"] = std::to_string(o.iterations);
  if (o.result) {
    j["p"] = to_decimal(o.result->factors.p);
    j["q"] = to_decimal(o.result->factors.q);
    j["c"] = to_decimal(o.result->terminal_c());
    j["alpha"] = to_decimal(o.result->terminal_alpha());
  }
  if (o.last_tested) j["last_tested"] = to_decimal(*o.last_tested);
  j["nanos"] = std::to_string(t.elapsed.count());
  return j;
}

void print_outcome(std::ostream& out, const TimedOutcome& t) {
  const SolveOutcome& o = t.outcome;
  out << to_string(o.method) << ": " << to_string(o.status) << " after " << o.iterations
      << " iterations";
  if (o.result) {
    out << "\n  p = " << o.result->factors.p << "\n  q = " << o.result->factors.q
        << "\n  c = " << o.result->terminal_c() << "\n  alpha = " << o.result->terminal_alpha();
  } else if (o.last_tested) {
    out << " (last tested " << *o.last_tested << ")";
  }
  out << '\n';
}

int run_factor(const FactorOptions& opt, std::ostream& out, std::ostream& err) {
  const FermatContext ctx = make_context(parse_natural(opt.n));
  const SearchBudget budget(opt.max_iter);
  const bool want_c = opt.method != "alpha";
  const bool want_alpha = opt.method != "c";
  const Direction dir = opt.direction == "desc" ? Direction::descending : Direction::ascending;

  std::vector<TimedOutcome> outcomes;
  std::vector<std::string> skipped;
  auto timed = [](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveOutcome o = fn();
    return TimedOutcome{std::move(o), std::chrono::steady_clock::now() - t0};
  };

  if (want_c) {
    if (ctx.n < 9) throw std::invalid_argument("c-method needs n >= 9");
    outcomes.push_back(timed([&] { return c_method_solve(ctx, 0, budget); }));
  }
  if (want_alpha) {
    std::optional<SieveProfile> profile;
    try {
      profile = build_profile(ctx);
    } catch (const TriviallyFactorableError& e) {
      if (!want_c) throw;
      skipped.emplace_back(e.what());
    }
    if (profile) {
      const AlphaRange range = alpha_range(ctx);
      Natural start;
      if (!opt.alpha_start.empty()) {
        start = parse_natural(opt.alpha_start);
      } else if (dir == Direction::ascending) {
        start = std::max(range.min, boundary_paper(ctx));
      } else {
        start = range.max_exclusive - 1;
      }
      if (dir == Direction::ascending && opt.alpha_start.empty() && start >= range.max_exclusive) {
        outcomes.push_back({SolveOutcome{Method::alpha_method, SolveStatus::range_exhausted, 0,
                                         std::nullopt, std::nullopt},
                            {}});
      } else {
        outcomes.push_back(
            timed([&] { return alpha_method_solve(ctx, *profile, start, dir, budget); }));
      }
    }
  }

  const bool any = std::any_of(outcomes.begin(), outcomes.end(),
                               [](const TimedOutcome& t) { return t.outcome.factored(); });
  if (opt.json) {
    Json j;
    j["n"] = to_decimal(ctx.n);
    j["x0"] = to_decimal(ctx.x0);
    j["p0"] = to_decimal(ctx.p0);
    j["factored"] = any;
    j["results"] = Json::array();
    for (const auto& t : outcomes) j["results"].push_back(outcome_json(t));
    if (!skipped.empty()) j["skipped"] = skipped;
    out << j.dump(2) << '\n';
  } else {
    out << "n = " << ctx.n << "\nX0 = " << ctx.x0 << "\nP0 = " << ctx.p0 << '\n';
    for (const auto& t : outcomes) print_outcome(out, t);
    for (const auto& s : skipped) err << "alpha-method skipped: " << s << '\n';
  }
  return any ? kSuccess : kNotFactored;
}

int run_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  const FermatContext ctx = make_context(parse_natural(opt.n));
  const BoundMode mode = opt.mode == "exact" ? BoundMode::exact : BoundMode::paper;

  std::optional<Natural> p;
  std::optional<Natural> q;
  if (!opt.p.empty()) p = parse_natural(opt.p);
  if (!opt.q.empty()) q = parse_natural(opt.q);
  auto cofactor = [&](const Natural& d) {
    if (sgn(d) == 0 || !mpz_divisible_p(ctx.n.get_mpz_t(), d.get_mpz_t()))
      throw std::invalid_argument(to_decimal(d) + " does not divide " + to_decimal(ctx.n));
    return Natural(ctx.n / d);
  };
  if (p && !q) q = cofactor(*p);
  if (q && !p) p = cofactor(*q);

  const RegionReport report =
      p ? effectiveness_report(ctx, *p, *q, mode) : region_report(ctx, mode);
  if (opt.json) {
    out << to_json(report) << '\n';
    return kSuccess;
  }
  out << "n = " << report.n << "\nX0 = " << report.x0 << "\nP0 = " << report.p0
      << "\nmode = " << to_string(report.mode) << "\nboundary_paper = " << report.boundary_paper
      << "\nboundary_exact = " << report.boundary_exact
      << "\nalpha_cap_paper = " << report.alpha_cap_paper << '\n';
  if (report.witness) {
    const auto& w = *report.witness;
    out << "p = " << w.p << "\nq = " << w.q << "\ntrue_c = " << w.true_c
        << "\ntrue_alpha = " << w.true_alpha << "\nz = " << w.z
        << "\nsieved_iterations = " << w.sieved_iterations << "\ndelta = " << w.delta
        << "\npredicted_better = " << to_string(w.predicted_better) << '\n';
  }
  return kSuccess;
}

int run_bench_command(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  BenchmarkSpec spec;
  spec.bits = opt.bits;
  spec.count = opt.count;
  spec.ratio_min = parse_ratio(opt.ratio_min);
  spec.ratio_max = parse_ratio(opt.ratio_max);
  spec.seed = opt.seed;
  spec.budget = SearchBudget(opt.max_iter);
  spec.validate();

  const auto records = run_bench(spec, opt.threads);
  const auto correct = std::count_if(records.begin(), records.end(),
                                     [](const BenchmarkRecord& r) { return r.prediction_correct; });
  std::ostream* summary = &err;
  if (opt.out.empty()) {
    write_csv(out, spec, records);
  } else {
    std::ofstream file(opt.out);
    if (!file) throw std::invalid_argument("cannot open '" + opt.out + "' for writing");
    write_csv(file, spec, records);
    summary = &out;
    *summary << "wrote " << records.size() << " records to " << opt.out << '\n';
  }
  *summary << "prediction correct: " << correct << "/" << records.size() << '\n';
  return kSuccess;
}

int run_verify(std::ostream& out) {
  const VerifyReport report = verify_example();
  for (const auto& e : report.entries) {
    out << std::left << std::setw(10) << e.name << (e.match() ? "ok       " : "MISMATCH ")
        << e.actual;
    if (!e.match()) out << " (expected " << e.expected << ")";
    out << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kSuccess : kNotFactored;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermat factorization laboratory: c-scan vs. sieved alpha-scan", "fermatlab"};
  app.require_subcommand(1);

  FactorOptions fopt;
  auto* factor = app.add_subcommand("factor", "Factor n with one or both searches");
  factor->add_option("n", fopt.n, "Odd modulus (decimal)")->required();
  factor->add_option("--method", fopt.method)->check(CLI::IsMember({"c", "alpha", "both"}));
  factor->add_option("--alpha-start", fopt.alpha_start, "First alpha to test");
  factor->add_option("--direction", fopt.direction)->check(CLI::IsMember({"asc", "desc"}));
  factor->add_option("--max-iter", fopt.max_iter, "Candidate budget per method");
  factor->add_flag("--json", fopt.json);

  AnalyzeOptions aopt;
  auto* analyze = app.add_subcommand("analyze", "Region-of-effectiveness report");
  analyze->add_option("n", aopt.n, "Odd modulus (decimal)")->required();
  analyze->add_option("--p", aopt.p, "Known factor");
  analyze->add_option("--q", aopt.q, "Known factor");
  analyze->add_option("--mode", aopt.mode)->check(CLI::IsMember({"paper", "exact"}));
  analyze->add_flag("--json", aopt.json);

  BenchOptions bopt;
  auto* bench = app.add_subcommand("bench", "Benchmark both searches on seeded semiprimes");
  bench->add_option("--bits", bopt.bits, "Bit length of n")->required();
  bench->add_option("--count", bopt.count, "Number of semiprimes")->required();
  bench->add_option("--ratio-min", bopt.ratio_min, "Lower bound on p/q, as A or A/B");
  bench->add_option("--ratio-max", bopt.ratio_max, "Exclusive upper bound on p/q");
  bench->add_option("--seed", bopt.seed);
  bench->add_option("--max-iter", bopt.max_iter, "Candidate budget per method per record");
  bench->add_option("--threads", bopt.threads);
  bench->add_option("--out", bopt.out, "CSV file (default: stdout)");

  auto* verify = app.add_subcommand("verify-example", "Recompute the 264-bit worked example");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (factor->parsed()) return run_factor(fopt, out, err);
    if (analyze->parsed()) return run_analyze(aopt, out);
    if (bench->parsed()) return run_bench_command(bopt, out, err);
    if (verify->parsed()) return run_verify(out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace fermatlab::cli
