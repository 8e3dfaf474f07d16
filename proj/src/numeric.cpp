#include "fermatlab/numeric.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace fermatlab {

namespace {

template <unsigned M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (unsigned x = 0; x < M; ++x) table[(x * x) % M] = true;
  return table;
}

constexpr auto kSquaresMod64 = square_residues<64>();
constexpr auto kSquaresMod63 = square_residues<63>();
constexpr auto kSquaresMod65 = square_residues<65>();
constexpr auto kSquaresMod11 = square_residues<11>();

// 63 * 65 * 11
constexpr unsigned kCombinedModulus = 45045;

bool residues_admit(unsigned low6, unsigned r) {
  return kSquaresMod64[low6] && kSquaresMod63[r % 63] && kSquaresMod65[r % 65] &&
         kSquaresMod11[r % 11];
}

}  // namespace

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("not a decimal natural number: '" + std::string(text) + "'");
  }
  return Natural(std::string(text), 10);
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

Natural isqrt(const Natural& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of a negative value");
  if (n < 2) return n;
  // x0 = 2^ceil(bits/2) is >= sqrt(n); Newton then decreases monotonically.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Natural x = 1;
  x <<= static_cast<mp_bitcnt_t>((bits + 1) / 2);
  Natural y = (x + n / x) >> 1;
  while (y < x) {
    x = y;
    y = (x + n / x) >> 1;
  }
  return x;
}

Natural ceil_sqrt(const Natural& n) {
  Natural r = isqrt(n);
  if (r * r != n) ++r;
  return r;
}

bool may_be_square(const Natural& n) {
  if (sgn(n) < 0) return false;
  const auto low6 = static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 64));
  if (!kSquaresMod64[low6]) return false;
  const auto r = static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), kCombinedModulus));
  return residues_admit(low6, r);
}

bool may_be_square(u128 n) {
  const auto low6 = static_cast<unsigned>(n & 63);
  if (!kSquaresMod64[low6]) return false;
  return residues_admit(low6, static_cast<unsigned>(n % kCombinedModulus));
}

std::optional<Natural> perfect_square_root(const Natural& n) {
  if (!may_be_square(n)) return std::nullopt;
  Natural r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::uint64_t isqrt(u128 n) {
  // long double carries a 64-bit mantissa on x86-64, so the estimate is off
  // by at most a couple of units; fix it up exactly.
  const long double estimate = std::sqrt(static_cast<long double>(n));
  std::uint64_t r = estimate >= 18446744073709551616.0L ? UINT64_MAX
                                                        : static_cast<std::uint64_t>(estimate);
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (r < UINT64_MAX && static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<std::uint64_t> perfect_square_root(u128 n) {
  if (!may_be_square(n)) return std::nullopt;
  const std::uint64_t r = isqrt(n);
  if (static_cast<u128>(r) * r == n) return r;
  return std::nullopt;
}

Natural round_div(const Natural& a, const Natural& b, Rounding mode) {
  if (sgn(b) == 0) throw std::invalid_argument("round_div: zero divisor");
  Natural q;
  if (mode == Rounding::floor) {
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } else {
    Natural num = 2 * a + b;
    Natural den = 2 * b;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return q;
}

bool fits_u64(const Integer& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Natural& v) {
  if (!fits_u64(v)) throw std::out_of_range("value does not fit 64 bits: " + to_decimal(v));
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

Natural from_u64(std::uint64_t v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

Natural from_u128(u128 v) {
  Natural out = from_u64(static_cast<std::uint64_t>(v >> 64));
  out <<= 64;
  out += from_u64(static_cast<std::uint64_t>(v));
  return out;
}

}  // namespace fermatlab
