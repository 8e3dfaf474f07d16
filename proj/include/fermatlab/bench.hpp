#pragma once

// Seeded semiprime corpora and the head-to-head benchmark of both searches.

#include "fermatlab/primes.hpp"
#include "fermatlab/rational.hpp"
#include "fermatlab/region.hpp"
#include "fermatlab/solvers.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fermatlab {

struct BenchmarkSpec {
  unsigned bits = 32;
  std::size_t count = 1;
  ExactRational ratio_min = 1;
  ExactRational ratio_max = 2;
  std::uint64_t seed = 1;
  SearchBudget budget{};

  /// Throws std::invalid_argument unless 1 <= ratio_min < ratio_max,
  /// count >= 1 and bits >= 12.
  void validate() const;
};

struct Semiprime {
  Natural n;
  Natural p;  // larger factor
  Natural q;
};

/// n = p*q with q < p, ratio_min <= p/q < ratio_max, gcd(n, 10) = 1 and n of
/// exactly spec.bits bits. Throws std::runtime_error after bounded retries.
Semiprime gen_semiprime(const BenchmarkSpec& spec, Rng& rng);

struct BenchmarkRecord {
  std::size_t index = 0;
  Natural n;
  Natural p;
  Natural q;
  unsigned bits = 0;
  ExactRational ratio;
  Natural true_c;
  Natural true_alpha;
  Natural boundary_paper;
  Natural alpha_start;
  SolveOutcome c_outcome;
  SolveOutcome alpha_outcome;
  Method predicted_better = Method::c_method;
  Method actual_better = Method::c_method;
  bool prediction_correct = false;
  std::chrono::nanoseconds c_time{};
  std::chrono::nanoseconds alpha_time{};
  // Set when a solver returned factors that disagree with the generator.
  bool c_mismatch = false;
  bool alpha_mismatch = false;
};

/// Benchmark one known semiprime: c-method from c = 0, alpha-method ascending
/// from max(ceil(sqrt(P0)), boundary_paper).
BenchmarkRecord bench_one(const Semiprime& sp, SearchBudget budget, std::size_t index = 0);

/// Generates spec.count semiprimes (record i seeded by derive_seed(seed, i))
/// and benchmarks each. Records come back in index order for any thread count.
std::vector<BenchmarkRecord> run_bench(const BenchmarkSpec& spec, unsigned threads = 1);

/// Header comment, column row, one row per record.
void write_csv(std::ostream& os, const BenchmarkSpec& spec,
               const std::vector<BenchmarkRecord>& records);

}  // namespace fermatlab
