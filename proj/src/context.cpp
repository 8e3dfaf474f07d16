#include "fermatlab/context.hpp"

#include "fermatlab/errors.hpp"

#include <stdexcept>

namespace fermatlab {

namespace {

void require_alpha_in_range(const FermatContext& ctx, const Natural& alpha) {
  if (!alpha_range(ctx).contains(alpha)) {
    throw AlphaRangeError("alpha " + to_decimal(alpha) + " outside [ceil(sqrt(P0)), X0) for n = " +
                          to_decimal(ctx.n));
  }
}

// 9*Pc < Xc^2 with Pc = Xc^2 - n, i.e. 8*Xc^2 < 9*n.
bool balanced_at(const FermatContext& ctx, const Natural& c) {
  const Natural xc = ctx.x0 + c;
  return 9 * compute_pc(ctx, c) < xc * xc;
}

bool balanced_at(const FermatContext& ctx, const ExactRational& c) {
  const ExactRational xc = ExactRational(ctx.x0) + c;
  const ExactRational pc = c * c + ExactRational(2 * ctx.x0) * c + ExactRational(ctx.p0);
  return ExactRational(9) * pc < xc * xc;
}

}  // namespace

FermatContext make_context(const Natural& n) {
  if (n < 3) throw std::invalid_argument("modulus must be at least 3, got " + to_decimal(n));
  if (!is_odd(n)) throw EvenModulusError("even modulus " + to_decimal(n) + "; divide out 2 first");
  FermatContext ctx;
  ctx.n = n;
  ctx.x0 = ceil_sqrt(n);
  ctx.p0 = ctx.x0 * ctx.x0 - n;
  ctx.k = ExactRational(ctx.p0, ctx.x0 * ctx.x0);
  return ctx;
}

Natural compute_pc(const FermatContext& ctx, const Natural& c) {
  return c * c + 2 * ctx.x0 * c + ctx.p0;
}

std::optional<Natural> alpha_to_c(const FermatContext& ctx, const Natural& alpha) {
  require_alpha_in_range(ctx, alpha);
  const Natural num = alpha * alpha - ctx.p0;
  const Natural den = 2 * (ctx.x0 - alpha);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
  Natural c;
  mpz_divexact(c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return c;
}

std::optional<Natural> c_to_alpha(const FermatContext& ctx, const Natural& c) {
  auto root = perfect_square_root(compute_pc(ctx, c));
  if (!root || *root < c) return std::nullopt;
  return Natural(*root - c);
}

FactorPair recover_factors(const FermatContext& ctx, const Natural& c, const Natural& alpha) {
  std::optional<Natural> expected;
  try {
    expected = alpha_to_c(ctx, alpha);
  } catch (const AlphaRangeError& e) {
    throw InvalidWitnessError(e.what());
  }
  if (!expected || *expected != c) {
    throw InvalidWitnessError("(c = " + to_decimal(c) + ", alpha = " + to_decimal(alpha) +
                              ") does not solve n = " + to_decimal(ctx.n));
  }
  return FactorPair{ctx.x0 + 2 * c + alpha, ctx.x0 - alpha, c, alpha};
}

Integer derivative_numerator(const FermatContext& ctx, const Natural& alpha) {
  return -alpha * alpha + 2 * ctx.x0 * alpha - ctx.p0;
}

ExactRational c_of_alpha(const FermatContext& ctx, const Natural& alpha) {
  if (alpha >= ctx.x0) throw std::domain_error("alpha must be below X0");
  return ExactRational(alpha * alpha - ctx.p0, 2 * (ctx.x0 - alpha));
}

RhoForm rho_form(const FermatContext& ctx, const Natural& alpha) {
  if (alpha >= ctx.x0) throw std::domain_error("rho form undefined for alpha >= X0");
  const ExactRational one(1);
  const ExactRational rho(alpha, ctx.x0);
  const ExactRational half_x0(ctx.x0, 2);
  ExactRational c = half_x0 * ((one - ctx.k) / (one - rho) - (one + rho));
  return RhoForm{rho, c};
}

AlphaRange alpha_range(const FermatContext& ctx) { return AlphaRange{ceil_sqrt(ctx.p0), ctx.x0}; }

std::optional<Natural> balanced_c_max(const FermatContext& ctx) {
  if (sgn(ctx.p0) == 0) {
    throw std::invalid_argument("balanced range undefined for perfect-square n = " +
                                to_decimal(ctx.n));
  }
  if (!balanced_at(ctx, Natural(0))) return std::nullopt;
  Natural c = isqrt(9 * ctx.n / 8) - ctx.x0;
  if (sgn(c) < 0) c = 0;
  while (sgn(c) > 0 && !balanced_at(ctx, c)) --c;
  while (balanced_at(ctx, Natural(c + 1))) ++c;
  return c;
}

std::optional<Natural> balanced_alpha_max(const FermatContext& ctx, BoundMode mode) {
  if (mode == BoundMode::paper) return round_div(3 * ctx.x0, 10, Rounding::floor);

  const AlphaRange range = alpha_range(ctx);
  if (range.min >= range.max_exclusive) return std::nullopt;
  if (!balanced_at(ctx, c_of_alpha(ctx, range.min))) return std::nullopt;
  // c(alpha) is increasing on the range, so the predicate holds on a prefix.
  Natural lo = range.min;
  Natural hi = range.max_exclusive;  // predicate false or out of range at hi
  while (hi - lo > 1) {
    Natural mid = (lo + hi) >> 1;
    if (balanced_at(ctx, c_of_alpha(ctx, mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace fermatlab
