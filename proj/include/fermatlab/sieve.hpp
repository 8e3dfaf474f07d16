#pragma once

// Candidate filter for the alpha-scan.
//
// For odd n, alpha has the parity of P0 and q = X0 - alpha is odd. When
// gcd(n, 10) = 1 the smaller factor q ends in 1, 3, 7 or 9, which pins the
// last digit of alpha to at most four values; the other six residues mod 10
// can be skipped without ever losing the true alpha.

#include "fermatlab/context.hpp"
#include "fermatlab/rational.hpp"

#include <array>
#include <cstdint>
#include <iterator>
#include <vector>

namespace fermatlab {

enum class Parity { even, odd };
enum class Direction { ascending, descending };

class SieveProfile {
 public:
  static constexpr unsigned kModulus = 10;

  SieveProfile(Parity alpha_parity, std::array<bool, kModulus> allowed);

  Parity alpha_parity() const { return alpha_parity_; }
  std::vector<unsigned> allowed_digits() const;
  bool allows_digit(unsigned digit) const { return allowed_[digit % kModulus]; }
  bool admits(const Natural& alpha) const;
  bool admits(std::uint64_t alpha) const { return allowed_[alpha % kModulus]; }

  /// Distance from a candidate ending in `digit` to the next admitted value
  /// in the given direction (1..10). 0 when no digit is admitted.
  unsigned step_from(unsigned digit, Direction dir) const;

 private:
  Parity alpha_parity_;
  std::array<bool, kModulus> allowed_;
  std::array<unsigned, kModulus> up_{};
  std::array<unsigned, kModulus> down_{};
};

/// Throws TriviallyFactorableError when n shares a factor with 10.
SieveProfile build_profile(const FermatContext& ctx);

/// 2*(x0 - 1 - ceil(sqrt(p0)))/5, the density estimate of sieved candidates.
ExactRational candidate_count(const FermatContext& ctx);

/// Exact number of admitted alphas in [from, to_exclusive).
Natural count_candidates(const SieveProfile& profile, const Natural& from,
                         const Natural& to_exclusive);

/// Lazily generated admitted alphas of a half-open interval.
class CandidateStream {
 public:
  class iterator {
   public:
    using value_type = Natural;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Natural& operator*() const { return current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class CandidateStream;
    iterator(const CandidateStream* owner, Natural start);
    void settle();

    const CandidateStream* owner_ = nullptr;
    Natural current_;
    bool done_ = true;
  };

  CandidateStream(SieveProfile profile, Natural from, Natural to_exclusive, Direction dir);

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

  Direction direction() const { return dir_; }

 private:
  SieveProfile profile_;
  Natural from_;
  Natural to_exclusive_;
  Direction dir_;
};

/// Throws AlphaRangeError when [from, to_exclusive) leaves the alpha range and
/// std::invalid_argument when from > to_exclusive.
CandidateStream iter_candidates(const FermatContext& ctx, const SieveProfile& profile,
                                const Natural& from, const Natural& to_exclusive, Direction dir);

}  // namespace fermatlab
