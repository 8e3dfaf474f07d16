#include "fermatlab/bench.hpp"

#include "fermatlab/context.hpp"
#include "fermatlab/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace fermatlab {

namespace {

constexpr int kPrimeAttempts = 400;
constexpr int kFactorAttempts = 2000;

// Smallest integer strictly greater than or equal to r (r >= 0).
Natural ceil_of(const ExactRational& r) {
  Integer f = r.floor();
  if (!r.is_integer()) ++f;
  return f;
}

std::optional<Natural> random_prime_in(const Natural& lo, const Natural& hi, Rng& rng) {
  if (lo >= hi) return std::nullopt;
  for (int i = 0; i < kPrimeAttempts; ++i) {
    Natural candidate = random_in(lo, hi, rng);
    if (is_probable_prime(candidate, rng)) return candidate;
  }
  return std::nullopt;
}

std::string_view status_column(const SolveOutcome& o, bool mismatch) {
  return mismatch ? "wrong_factors" : to_string(o.status);
}

}  // namespace

void BenchmarkSpec::validate() const {
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  if (bits < 12) throw std::invalid_argument("bits must be at least 12");
  if (ratio_min < ExactRational(1)) throw std::invalid_argument("ratio_min must be >= 1");
  if (!(ratio_min < ratio_max)) throw std::invalid_argument("ratio_min must be < ratio_max");
}

Semiprime gen_semiprime(const BenchmarkSpec& spec, Rng& rng) {
  spec.validate();
  Natural n_lo = 1;
  n_lo <<= spec.bits - 1;
  const Natural n_hi = 2 * n_lo;  // exclusive

  // q^2 * ratio spans [n_lo, n_hi).
  Natural q_lo = isqrt(n_lo * spec.ratio_max.denominator() / spec.ratio_max.numerator());
  const Natural q_hi = isqrt(n_hi * spec.ratio_min.denominator() / spec.ratio_min.numerator()) + 1;
  q_lo = std::max(q_lo, Natural(7));

  for (int attempt = 0; attempt < kFactorAttempts; ++attempt) {
    auto q = random_prime_in(q_lo, q_hi, rng);
    if (!q || *q == 5) continue;
    Natural p_lo = std::max({ceil_of(spec.ratio_min * ExactRational(*q)), Natural(*q + 1),
                             Natural((n_lo + *q - 1) / *q)});
    Natural p_hi = std::min(ceil_of(spec.ratio_max * ExactRational(*q)), Natural((n_hi - 1) / *q + 1));
    auto p = random_prime_in(p_lo, p_hi, rng);
    if (!p || *p == 5) continue;
    Natural n = *p * *q;
    if (n < n_lo || n >= n_hi) continue;
    return Semiprime{std::move(n), std::move(*p), std::move(*q)};
  }
  throw std::runtime_error("could not generate a " + std::to_string(spec.bits) +
                           "-bit semiprime with ratio in [" + spec.ratio_min.to_string() + ", " +
                           spec.ratio_max.to_string() + ")");
}

BenchmarkRecord bench_one(const Semiprime& sp, SearchBudget budget, std::size_t index) {
  using clock = std::chrono::steady_clock;
  const FermatContext ctx = make_context(sp.n);
  const RegionReport report = effectiveness_report(ctx, sp.p, sp.q, BoundMode::paper);
  const auto& w = *report.witness;

  BenchmarkRecord rec;
  rec.index = index;
  rec.n = sp.n;
  rec.p = w.p;
  rec.q = w.q;
  rec.bits = static_cast<unsigned>(mpz_sizeinbase(sp.n.get_mpz_t(), 2));
  rec.ratio = ExactRational(w.p, w.q);
  rec.true_c = w.true_c;
  rec.true_alpha = w.true_alpha;
  rec.boundary_paper = report.boundary_paper;
  rec.predicted_better = w.predicted_better;

  auto t0 = clock::now();
  rec.c_outcome = c_method_solve(ctx, 0, budget);
  rec.c_time = clock::now() - t0;

  const AlphaRange range = alpha_range(ctx);
  rec.alpha_start = std::max(range.min, report.boundary_paper);
  t0 = clock::now();
  if (rec.alpha_start < range.max_exclusive) {
    rec.alpha_outcome = alpha_method_solve(ctx, build_profile(ctx), rec.alpha_start,
                                           Direction::ascending, budget);
  } else {
    rec.alpha_outcome = SolveOutcome{Method::alpha_method, SolveStatus::range_exhausted, 0,
                                     std::nullopt, std::nullopt};
  }
  rec.alpha_time = clock::now() - t0;

  auto wrong = [&](const SolveOutcome& o) {
    return o.factored() && (o.result->factors.p != rec.p || o.result->factors.q != rec.q);
  };
  rec.c_mismatch = wrong(rec.c_outcome);
  rec.alpha_mismatch = wrong(rec.alpha_outcome);

  const bool c_ok = rec.c_outcome.factored() && !rec.c_mismatch;
  const bool alpha_ok = rec.alpha_outcome.factored() && !rec.alpha_mismatch;
  rec.actual_better =
      alpha_ok && (!c_ok || rec.alpha_outcome.iterations <= rec.c_outcome.iterations)
          ? Method::alpha_method
          : Method::c_method;
  rec.prediction_correct = (c_ok || alpha_ok) && rec.actual_better == rec.predicted_better;
  return rec;
}

std::vector<BenchmarkRecord> run_bench(const BenchmarkSpec& spec, unsigned threads) {
  spec.validate();
  std::vector<BenchmarkRecord> records(spec.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.count; i = next++) {
      Rng rng(derive_seed(spec.seed, i));
      records[i] = bench_one(gen_semiprime(spec, rng), spec.budget, i);
    }
  };
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(spec.count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

void write_csv(std::ostream& os, const BenchmarkSpec& spec,
               const std::vector<BenchmarkRecord>& records) {
  os << "# fermatlab bench bits=" << spec.bits << " count=" << spec.count
     << " ratio_min=" << spec.ratio_min << " ratio_max=" << spec.ratio_max
     << " seed=" << spec.seed << " max_iter=" << spec.budget.max_iterations()
     << " rng=mt19937_64+splitmix64\n";
  os << "n,p,q,bits,ratio_num,ratio_den,true_c,true_alpha,c_iters,alpha_iters,boundary_paper,"
        "predicted_better,prediction_correct,c_status,alpha_status,c_nanos,alpha_nanos\n";
  for (const auto& r : records) {
    os << r.n << ',' << r.p << ',' << r.q << ',' << r.bits << ',' << r.ratio.numerator() << ','
       << r.ratio.denominator() << ',' << r.true_c << ',' << r.true_alpha << ','
       << r.c_outcome.iterations << ',' << r.alpha_outcome.iterations << ',' << r.boundary_paper
       << ',' << to_string(r.predicted_better) << ',' << (r.prediction_correct ? "true" : "false")
       << ',' << status_column(r.c_outcome, r.c_mismatch) << ','
       << status_column(r.alpha_outcome, r.alpha_mismatch) << ',' << r.c_time.count() << ','
       << r.alpha_time.count() << '\n';
  }
}

}  // namespace fermatlab
