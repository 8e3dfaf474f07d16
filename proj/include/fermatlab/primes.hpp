#pragma once

#include "fermatlab/numeric.hpp"

#include <cstdint>
#include <random>

namespace fermatlab {

/// Generator behind every seeded draw (prime search, benchmark corpora).
using Rng = std::mt19937_64;

/// One SplitMix64 step; used to derive independent sub-seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed for item `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform in [0, 2^bits).
Natural random_bits(unsigned bits, Rng& rng);

/// Uniform in [lo, hi_exclusive). Throws std::invalid_argument on an empty range.
Natural random_in(const Natural& lo, const Natural& hi_exclusive, Rng& rng);

/// Miller-Rabin. Deterministic below 2^64 (bases 2..37); 40 random bases above.
bool is_probable_prime(const Natural& n, Rng& rng);

/// Prime with exactly `bits` bits. Throws std::invalid_argument for bits < 8.
Natural gen_prime(unsigned bits, Rng& rng);

}  // namespace fermatlab
