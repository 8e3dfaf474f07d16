// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are fixed here and never tuned at run time.

#include "fermatlab/bench.hpp"
#include "fermatlab/context.hpp"
#include "fermatlab/errors.hpp"
#include "fermatlab/region.hpp"
#include "fermatlab/sieve.hpp"
#include "fermatlab/solvers.hpp"
#include "fermatlab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace fermatlab;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 0x5EED'F3A7ULL;

// Criterion 2 / 4 corpus.
constexpr int kOracleCorpus = 500;
constexpr unsigned kOracleMinBits = 16;
constexpr unsigned kOracleMaxBits = 48;
constexpr double kOracleSeconds = 60.0;

constexpr double kDensity = 0.4;
constexpr double kDensityTolerance = 0.02;
constexpr int kCountTolerance = 4;

constexpr int kMonotoneContexts = 100;
constexpr int kFormSamples = 1000;

// Criterion 6 / 7 corpus.
constexpr int kCrossoverCorpus = 300;
constexpr unsigned kCrossoverMinBits = 24;
constexpr unsigned kCrossoverMaxBits = 40;
constexpr double kCrossoverAccuracy = 0.95;
constexpr double kCrossoverSeconds = 300.0;

constexpr double kExampleSeconds = 1.0;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Smallest prime factor by trial division.
std::uint64_t smallest_factor(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return n;
}

std::vector<Semiprime> corpus(int count, unsigned min_bits, unsigned max_bits, ExactRational lo,
                              ExactRational hi, std::uint64_t seed) {
  std::vector<Semiprime> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    BenchmarkSpec spec;
    spec.bits = min_bits + static_cast<unsigned>(rng() % (max_bits - min_bits + 1));
    spec.ratio_min = lo;
    spec.ratio_max = hi;
    out.push_back(gen_semiprime(spec, rng));
  }
  return out;
}

const std::vector<Semiprime>& oracle_corpus() {
  static const auto c = corpus(kOracleCorpus, kOracleMinBits, kOracleMaxBits, 1, 8, kSeed);
  return c;
}

const std::vector<BenchmarkRecord>& crossover_records() {
  static const auto records = [] {
    const auto sps =
        corpus(kCrossoverCorpus, kCrossoverMinBits, kCrossoverMaxBits, 1, 2, kSeed ^ 0xC0FFEE);
    std::vector<BenchmarkRecord> out;
    for (std::size_t i = 0; i < sps.size(); ++i) out.push_back(bench_one(sps[i], SearchBudget(), i));
    return out;
  }();
  return records;
}

Outcome worked_example_reproduction() {
  const auto t0 = Clock::now();
  const VerifyReport report = verify_example();
  const double secs = seconds_since(t0);
  std::ostringstream os;
  int matched = 0;
  for (const auto& e : report.entries) {
    if (e.match()) {
      ++matched;
    } else {
      os << e.name << ": expected " << e.expected << " got " << e.actual << "; ";
    }
  }
  os << matched << "/" << report.entries.size() << " values digit-exact, " << secs << " s";
  return {report.passed() && secs < kExampleSeconds, os.str()};
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  int failures = 0;
  std::ostringstream first;
  for (const Semiprime& sp : oracle_corpus()) {
    const FermatContext ctx = make_context(sp.n);
    const std::uint64_t small = smallest_factor(to_u64(sp.n));
    const std::uint64_t big = to_u64(sp.n) / small;
    const auto c_run = c_method_solve(ctx, 0, SearchBudget());
    const auto a_run = alpha_method_solve(ctx, build_profile(ctx), alpha_range(ctx).min,
                                          Direction::ascending, SearchBudget());
    bool ok = c_run.factored() && a_run.factored();
    if (ok) {
      for (const auto* r : {&c_run, &a_run}) {
        ok &= r->result->factors.q == from_u64(small) && r->result->factors.p == from_u64(big);
        ok &= r->result->factors.q == sp.q && r->result->factors.p == sp.p;
      }
      ok &= c_run.result->terminal_c() == (sp.p + sp.q) / 2 - ceil_sqrt(sp.n);
    }
    if (!ok && failures++ == 0) first << " first failure n=" << sp.n;
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << oracle_corpus().size() - failures << "/" << oracle_corpus().size()
     << " semiprimes agree with trial division, " << secs << " s" << first.str();
  return {failures == 0 && secs < kOracleSeconds, os.str()};
}

Outcome divisibility_equivalence() {
  long checked = 0;
  long exceptions = 0;
  for (unsigned long n = 9; n < 10'000; n += 2) {
    if (n % 5 == 0 || smallest_factor(n) == n) continue;
    const FermatContext ctx = make_context(n);
    const AlphaRange range = alpha_range(ctx);
    for (Natural alpha = range.min; alpha < range.max_exclusive; ++alpha) {
      const ExactRational c = c_of_alpha(ctx, alpha);
      const bool integral = c.is_integer() && c >= ExactRational(0);
      const Natural q = ctx.x0 - alpha;
      const bool divides = n % q.get_ui() == 0;
      const bool via_api = alpha_to_c(ctx, alpha).has_value();
      if (integral != divides || via_api != divides) ++exceptions;
      ++checked;
    }
  }
  std::ostringstream os;
  os << checked << " (n, alpha) pairs, " << exceptions << " exceptions";
  return {exceptions == 0 && checked > 0, os.str()};
}

Outcome sieve_soundness_and_density() {
  int missed = 0;
  int density_bad = 0;
  int enumeration_bad = 0;
  double worst_density_gap = 0;
  for (const Semiprime& sp : oracle_corpus()) {
    const FermatContext ctx = make_context(sp.n);
    const SieveProfile profile = build_profile(ctx);
    const AlphaRange range = alpha_range(ctx);
    const Natural alpha = ctx.x0 - sp.q;

    // The true alpha must come out of the stream itself.
    const Natural lo = alpha >= range.min + 12 ? Natural(alpha - 12) : range.min;
    const Natural hi = alpha + 12 < range.max_exclusive ? Natural(alpha + 12) : range.max_exclusive;
    bool found = false;
    for (const Natural& a : iter_candidates(ctx, profile, lo, hi, Direction::ascending))
      found |= a == alpha;
    if (!found) ++missed;

    const Natural full = count_candidates(profile, range.min, range.max_exclusive);
    if (range.max_exclusive - range.min < 200'000) {
      Natural listed = 0;
      for ([[maybe_unused]] const Natural& a :
           iter_candidates(ctx, profile, range.min, range.max_exclusive, Direction::ascending))
        ++listed;
      if (listed != full) ++enumeration_bad;
    }
    const double density = full.get_d() / Natural(range.max_exclusive - range.min).get_d();
    const double gap = std::abs(density - kDensity);
    worst_density_gap = std::max(worst_density_gap, gap);
    if (gap > kDensityTolerance) ++density_bad;
  }

  int count_bad = 0;
  long swept = 0;
  for (unsigned long n = 3; n < 10'000; n += 2) {
    if (n % 5 == 0) continue;
    const FermatContext ctx = make_context(n);
    const AlphaRange range = alpha_range(ctx);
    long listed = 0;
    for ([[maybe_unused]] const Natural& a : iter_candidates(
             ctx, build_profile(ctx), range.min, range.max_exclusive, Direction::ascending))
      ++listed;
    const ExactRational diff = ExactRational(Integer(listed)) - candidate_count(ctx);
    if (diff > ExactRational(kCountTolerance) || diff < ExactRational(-kCountTolerance)) ++count_bad;
    ++swept;
  }

  std::ostringstream os;
  os << "true alpha missed " << missed << "/" << oracle_corpus().size()
     << "; worst |density - 0.4| = " << worst_density_gap << " (" << density_bad
     << " over tolerance); stream/count disagreements " << enumeration_bad
     << "; count-formula violations " << count_bad << "/" << swept;
  return {missed == 0 && density_bad == 0 && enumeration_bad == 0 && count_bad == 0, os.str()};
}

Outcome monotonicity_and_positivity() {
  long non_monotone = 0;
  long non_positive = 0;
  long steps = 0;
  auto sweep = [&](const FermatContext& ctx) {
    if (sgn(ctx.p0) == 0) return;
    const AlphaRange range = alpha_range(ctx);
    ExactRational prev = rho_form(ctx, range.min).c;
    for (Natural alpha = range.min; alpha < range.max_exclusive; ++alpha) {
      if (derivative_numerator(ctx, alpha) <= 0) ++non_positive;
      if (alpha > range.min) {
        const ExactRational cur = rho_form(ctx, alpha).c;
        if (!(cur > prev)) ++non_monotone;
        prev = cur;
      }
      ++steps;
    }
  };
  Rng rng(kSeed + 5);
  for (int i = 0; i < kMonotoneContexts; ++i) {
    Natural n = random_bits(20, rng);
    mpz_setbit(n.get_mpz_t(), 19);
    mpz_setbit(n.get_mpz_t(), 0);
    sweep(make_context(n));
  }
  for (unsigned long n = 3; n < 10'000; n += 2) sweep(make_context(n));

  long form_mismatch = 0;
  for (int i = 0; i < kFormSamples; ++i) {
    Natural n = random_bits(128, rng);
    mpz_setbit(n.get_mpz_t(), 127);
    mpz_setbit(n.get_mpz_t(), 0);
    const FermatContext ctx = make_context(n);
    const AlphaRange range = alpha_range(ctx);
    const Natural alpha = random_in(range.min, range.max_exclusive, rng);
    if (rho_form(ctx, alpha).c != ExactRational(alpha * alpha - ctx.p0, 2 * (ctx.x0 - alpha)))
      ++form_mismatch;
  }

  std::ostringstream os;
  os << steps << " alpha steps: " << non_monotone << " non-increasing, " << non_positive
     << " non-positive derivative; form mismatches " << form_mismatch << "/" << kFormSamples;
  return {non_monotone == 0 && non_positive == 0 && form_mismatch == 0, os.str()};
}

Outcome crossover_prediction() {
  const auto t0 = Clock::now();
  const auto& records = crossover_records();
  const double secs = seconds_since(t0);
  int correct = 0;
  int above = 0;
  int above_ok = 0;
  int below_ok = 0;
  int exact_paper_disagree = 0;
  for (const auto& r : records) {
    if (r.prediction_correct) ++correct;
    const FermatContext ctx = make_context(r.n);
    if (r.true_alpha >= r.boundary_paper) {
      ++above;
      if (r.alpha_outcome.factored() && r.alpha_outcome.iterations <= r.c_outcome.iterations)
        ++above_ok;
    } else if (!r.alpha_outcome.factored() ||
               r.c_outcome.iterations <= r.alpha_outcome.iterations) {
      ++below_ok;
    }
    if (classify(ctx, r.true_alpha, BoundMode::exact) != r.predicted_better) ++exact_paper_disagree;
  }
  const double accuracy = static_cast<double>(correct) / static_cast<double>(records.size());
  std::ostringstream os;
  os << "prediction correct " << correct << "/" << records.size() << " (" << accuracy * 100
     << "%); alpha-region " << above_ok << "/" << above << ", c-region " << below_ok << "/"
     << records.size() - above << "; exact/paper boundary disagreements " << exact_paper_disagree
     << "; " << secs << " s";
  return {accuracy >= kCrossoverAccuracy && secs < kCrossoverSeconds, os.str()};
}

Outcome balanced_range_bounds() {
  int violations = 0;
  for (const auto& r : crossover_records()) {
    const FermatContext ctx = make_context(r.n);
    const Natural xc = ctx.x0 + r.true_c;
    const bool predicate = 9 * compute_pc(ctx, r.true_c) < xc * xc;
    const bool c_bound = r.true_c < round_div(61 * ctx.x0, 1000, Rounding::half_up) + 1;
    const bool alpha_bound = r.true_alpha < *balanced_alpha_max(ctx, BoundMode::paper);
    if (!(predicate && c_bound && alpha_bound)) ++violations;
  }
  std::ostringstream os;
  os << violations << " violations over " << crossover_records().size() << " balanced semiprimes";
  return {violations == 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 worked-example reproduction", worked_example_reproduction},
      {"2 oracle equivalence", oracle_equivalence},
      {"3 divisibility equivalence", divisibility_equivalence},
      {"4 sieve soundness and density", sieve_soundness_and_density},
      {"5 monotonicity and positivity", monotonicity_and_positivity},
      {"6 crossover prediction", crossover_prediction},
      {"7 balanced-range bounds", balanced_range_bounds},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
