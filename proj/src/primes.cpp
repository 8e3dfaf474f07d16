#include "fermatlab/primes.hpp"

#include <array>
#include <stdexcept>

namespace fermatlab {

namespace {

constexpr std::array<unsigned, 12> kDeterministicBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr int kRandomRounds = 40;

constexpr std::array<unsigned, 24> kSmallPrimes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

// n - 1 = d * 2^s with d odd.
bool strong_probable_prime(const Natural& n, const Natural& base, const Natural& d, unsigned s) {
  const Natural n_minus_1 = n - 1;
  Natural x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ splitmix64(index);
  return splitmix64(state);
}

Natural random_bits(unsigned bits, Rng& rng) {
  Natural out = 0;
  unsigned remaining = bits;
  while (remaining > 0) {
    const unsigned take = remaining < 64 ? remaining : 64;
    std::uint64_t word = rng();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    out <<= take;
    out += from_u64(word);
    remaining -= take;
  }
  return out;
}

Natural random_in(const Natural& lo, const Natural& hi_exclusive, Rng& rng) {
  if (lo >= hi_exclusive) throw std::invalid_argument("random_in: empty range");
  const Natural span = hi_exclusive - lo;
  const auto bits = static_cast<unsigned>(mpz_sizeinbase(Natural(span - 1).get_mpz_t(), 2));
  for (;;) {
    Natural draw = random_bits(bits, rng);
    if (draw < span) return lo + draw;
  }
}

bool is_probable_prime(const Natural& n, Rng& rng) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  Natural d = n - 1;
  unsigned s = 0;
  while (!is_odd(d)) {
    d >>= 1;
    ++s;
  }
  if (fits_u64(n)) {
    for (unsigned base : kDeterministicBases)
      if (!strong_probable_prime(n, Natural(base), d, s)) return false;
    return true;
  }
  for (int round = 0; round < kRandomRounds; ++round) {
    const Natural base = random_in(2, Natural(n - 1), rng);
    if (!strong_probable_prime(n, base, d, s)) return false;
  }
  return true;
}

Natural gen_prime(unsigned bits, Rng& rng) {
  if (bits < 8) throw std::invalid_argument("gen_prime needs at least 8 bits");
  for (;;) {
    Natural candidate = random_bits(bits - 1, rng);
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (is_probable_prime(candidate, rng)) return candidate;
  }
}

}  // namespace fermatlab
