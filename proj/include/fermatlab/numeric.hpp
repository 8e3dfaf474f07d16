#pragma once

// Arbitrary-precision integer primitives shared by every other module.
//
// Natural and Integer are both GMP integers; Natural marks values the caller
// guarantees to be nonnegative. The decimal form (no sign, no separators) is
// the interchange format for all command-line I/O.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fermatlab {

using Natural = mpz_class;
using Integer = mpz_class;
using u128 = unsigned __int128;

/// Parses a nonempty run of ASCII digits. Throws std::invalid_argument on
/// anything else (signs, whitespace, separators).
Natural parse_natural(std::string_view text);

std::string to_decimal(const Integer& value);

/// Largest r with r*r <= n, by Newton iteration.
Natural isqrt(const Natural& n);

/// Smallest r with r*r >= n.
Natural ceil_sqrt(const Natural& n);

/// Root of n when n is a perfect square.
std::optional<Natural> perfect_square_root(const Natural& n);

inline bool is_perfect_square(const Natural& n) { return perfect_square_root(n).has_value(); }

// 128-bit variants used by the solvers' narrow fast path.
std::uint64_t isqrt(u128 n);
std::optional<std::uint64_t> perfect_square_root(u128 n);

/// Cheap residue test: false means n is certainly not a square.
bool may_be_square(const Natural& n);
bool may_be_square(u128 n);

enum class Rounding { floor, half_up };

/// floor(a/b) or floor((2a+b)/(2b)). Throws std::invalid_argument when b == 0.
Natural round_div(const Natural& a, const Natural& b, Rounding mode);

inline bool is_odd(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

/// True when v fits an unsigned 64-bit word.
bool fits_u64(const Integer& v);
std::uint64_t to_u64(const Natural& v);
Natural from_u64(std::uint64_t v);
Natural from_u128(u128 v);

}  // namespace fermatlab
