#include "fermatlab/sieve.hpp"

#include "fermatlab/errors.hpp"

#include <stdexcept>
#include <utility>

namespace fermatlab {

namespace {

constexpr std::array<unsigned, 4> kUnitDigits{1, 3, 7, 9};

unsigned digit_of(const Natural& v) {
  return static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), SieveProfile::kModulus));
}

// Number of admitted values in [0, bound).
Natural admitted_below(const SieveProfile& profile, const Natural& bound) {
  if (sgn(bound) <= 0) return 0;
  const Natural blocks = bound / SieveProfile::kModulus;
  const unsigned tail = digit_of(bound);
  unsigned per_block = 0;
  unsigned in_tail = 0;
  for (unsigned d = 0; d < SieveProfile::kModulus; ++d) {
    if (!profile.allows_digit(d)) continue;
    ++per_block;
    if (d < tail) ++in_tail;
  }
  return blocks * per_block + in_tail;
}

}  // namespace

SieveProfile::SieveProfile(Parity alpha_parity, std::array<bool, kModulus> allowed)
    : alpha_parity_(alpha_parity), allowed_(allowed) {
  for (unsigned d = 0; d < kModulus; ++d) {
    for (unsigned s = 1; s <= kModulus; ++s) {
      if (up_[d] == 0 && allowed_[(d + s) % kModulus]) up_[d] = s;
      if (down_[d] == 0 && allowed_[(d + kModulus - s) % kModulus]) down_[d] = s;
    }
  }
}

std::vector<unsigned> SieveProfile::allowed_digits() const {
  std::vector<unsigned> out;
  for (unsigned d = 0; d < kModulus; ++d)
    if (allowed_[d]) out.push_back(d);
  return out;
}

bool SieveProfile::admits(const Natural& alpha) const { return allowed_[digit_of(alpha)]; }

unsigned SieveProfile::step_from(unsigned digit, Direction dir) const {
  return dir == Direction::ascending ? up_[digit % kModulus] : down_[digit % kModulus];
}

SieveProfile build_profile(const FermatContext& ctx) {
  const unsigned n_digit = digit_of(ctx.n);
  if (n_digit % 2 == 0 || n_digit == 5) {
    throw TriviallyFactorableError("n = " + to_decimal(ctx.n) +
                                   " is divisible by 2 or 5; the last-digit sieve does not apply");
  }
  const unsigned x0_digit = digit_of(ctx.x0);
  std::array<bool, SieveProfile::kModulus> allowed{};
  for (unsigned q_digit : kUnitDigits) {
    bool feasible = false;
    for (unsigned p_digit : kUnitDigits) feasible |= (q_digit * p_digit) % 10 == n_digit;
    if (!feasible) continue;
    allowed[(x0_digit + 10 - q_digit) % 10] = true;
  }
  return SieveProfile(is_odd(ctx.p0) ? Parity::odd : Parity::even, allowed);
}

ExactRational candidate_count(const FermatContext& ctx) {
  return ExactRational(2 * (ctx.x0 - 1 - ceil_sqrt(ctx.p0)), 5);
}

Natural count_candidates(const SieveProfile& profile, const Natural& from,
                         const Natural& to_exclusive) {
  if (from >= to_exclusive) return 0;
  return admitted_below(profile, to_exclusive) - admitted_below(profile, from);
}

CandidateStream::CandidateStream(SieveProfile profile, Natural from, Natural to_exclusive,
                                 Direction dir)
    : profile_(std::move(profile)),
      from_(std::move(from)),
      to_exclusive_(std::move(to_exclusive)),
      dir_(dir) {}

CandidateStream::iterator CandidateStream::begin() const {
  if (from_ >= to_exclusive_) return iterator{};
  return iterator(this, dir_ == Direction::ascending ? from_ : Natural(to_exclusive_ - 1));
}

CandidateStream::iterator::iterator(const CandidateStream* owner, Natural start)
    : owner_(owner), current_(std::move(start)), done_(false) {
  settle();
}

void CandidateStream::iterator::settle() {
  const SieveProfile& profile = owner_->profile_;
  if (profile.step_from(0, Direction::ascending) == 0) {
    done_ = true;
    return;
  }
  if (!profile.admits(current_)) {
    const unsigned step = profile.step_from(digit_of(current_), owner_->dir_);
    if (owner_->dir_ == Direction::ascending) {
      current_ += step;
    } else {
      current_ -= step;
    }
  }
  done_ = owner_->dir_ == Direction::ascending ? current_ >= owner_->to_exclusive_
                                               : current_ < owner_->from_;
}

CandidateStream::iterator& CandidateStream::iterator::operator++() {
  const unsigned step = owner_->profile_.step_from(digit_of(current_), owner_->dir_);
  if (owner_->dir_ == Direction::ascending) {
    current_ += step;
  } else {
    current_ -= step;
  }
  done_ = owner_->dir_ == Direction::ascending ? current_ >= owner_->to_exclusive_
                                               : current_ < owner_->from_;
  return *this;
}

CandidateStream iter_candidates(const FermatContext& ctx, const SieveProfile& profile,
                                const Natural& from, const Natural& to_exclusive, Direction dir) {
  if (from > to_exclusive) throw std::invalid_argument("candidate interval has from > to");
  const AlphaRange range = alpha_range(ctx);
  if (from < range.min || to_exclusive > range.max_exclusive) {
    throw AlphaRangeError("candidate interval [" + to_decimal(from) + ", " +
                          to_decimal(to_exclusive) + ") leaves the alpha range [" +
                          to_decimal(range.min) + ", " + to_decimal(range.max_exclusive) + ")");
  }
  return CandidateStream(profile, from, to_exclusive, dir);
}

}  // namespace fermatlab
