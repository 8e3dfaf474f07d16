#include "fermatlab/solvers.hpp"

#include "fermatlab/errors.hpp"

#include <stdexcept>

namespace fermatlab {

namespace {

SolveOutcome factored(Method method, std::uint64_t iterations, FactorPair pair) {
  SolveOutcome out{method, SolveStatus::factored, iterations, pair.alpha, std::nullopt};
  if (method == Method::c_method) out.last_tested = pair.c;
  out.result = SolveResult{method, std::move(pair), iterations};
  return out;
}

SolveOutcome c_scan_wide(const FermatContext& ctx, Natural c, std::uint64_t max_iterations) {
  Natural pc = compute_pc(ctx, c);
  Natural step = 2 * (ctx.x0 + c) + 1;  // Pc(c+1) - Pc(c)
  for (std::uint64_t it = 1; it <= max_iterations; ++it) {
    if (auto root = perfect_square_root(pc)) {
      Natural alpha = *root - c;
      Natural q = ctx.x0 - alpha;
      if (q == 1) return {Method::c_method, SolveStatus::trivial_only, it, c, std::nullopt};
      Natural p = ctx.x0 + 2 * c + alpha;
      return factored(Method::c_method, it, FactorPair{p, q, c, alpha});
    }
    pc += step;
    step += 2;
    ++c;
  }
  return {Method::c_method, SolveStatus::budget_exhausted, max_iterations, Natural(c - 1),
          std::nullopt};
}

SolveOutcome c_scan_narrow(const FermatContext& ctx, std::uint64_t c, std::uint64_t max_iterations) {
  const std::uint64_t x0 = to_u64(ctx.x0);
  const u128 n = to_u64(ctx.n);
  const u128 xc = static_cast<u128>(x0) + c;
  u128 pc = xc * xc - n;
  u128 step = 2 * xc + 1;
  for (std::uint64_t it = 1; it <= max_iterations; ++it) {
    if (auto root = perfect_square_root(pc)) {
      const std::uint64_t alpha = *root - c;
      const std::uint64_t q = x0 - alpha;
      if (q == 1) {
        return {Method::c_method, SolveStatus::trivial_only, it, from_u64(c), std::nullopt};
      }
      const u128 p = static_cast<u128>(x0) + 2 * static_cast<u128>(c) + alpha;
      return factored(Method::c_method, it,
                      FactorPair{from_u128(p), from_u64(q), from_u64(c), from_u64(alpha)});
    }
    pc += step;
    step += 2;
    ++c;
  }
  return {Method::c_method, SolveStatus::budget_exhausted, max_iterations, from_u64(c - 1),
          std::nullopt};
}

FactorPair pair_from_divisor(const FermatContext& ctx, const Natural& alpha, const Natural& q) {
  Natural p = ctx.n / q;
  Natural c = (p + q) / 2 - ctx.x0;
  return FactorPair{std::move(p), q, std::move(c), alpha};
}

SolveOutcome alpha_scan_wide(const FermatContext& ctx, const SieveProfile& profile,
                             const Natural& alpha_start, Direction dir,
                             std::uint64_t max_iterations) {
  const AlphaRange range = alpha_range(ctx);
  const CandidateStream stream =
      dir == Direction::ascending
          ? CandidateStream(profile, alpha_start, range.max_exclusive, dir)
          : CandidateStream(profile, range.min, Natural(alpha_start + 1), dir);
  std::uint64_t it = 0;
  std::optional<Natural> last;
  for (const Natural& alpha : stream) {
    if (it == max_iterations) {
      return {Method::alpha_method, SolveStatus::budget_exhausted, it, last, std::nullopt};
    }
    ++it;
    last = alpha;
    const Natural q = ctx.x0 - alpha;
    if (q > 1 && mpz_divisible_p(ctx.n.get_mpz_t(), q.get_mpz_t())) {
      return factored(Method::alpha_method, it, pair_from_divisor(ctx, alpha, q));
    }
  }
  return {Method::alpha_method, SolveStatus::range_exhausted, it, last, std::nullopt};
}

SolveOutcome alpha_scan_narrow(const FermatContext& ctx, const SieveProfile& profile,
                               std::uint64_t alpha, Direction dir, std::uint64_t max_iterations) {
  const std::uint64_t n = to_u64(ctx.n);
  const std::uint64_t x0 = to_u64(ctx.x0);
  const std::uint64_t lo = to_u64(alpha_range(ctx).min);
  const bool up = dir == Direction::ascending;
  if (!profile.admits(alpha)) {
    const unsigned step = profile.step_from(static_cast<unsigned>(alpha % 10), dir);
    if (!up && alpha < step) {
      return {Method::alpha_method, SolveStatus::range_exhausted, 0, std::nullopt, std::nullopt};
    }
    alpha = up ? alpha + step : alpha - step;
  }
  std::uint64_t it = 0;
  std::optional<std::uint64_t> last;
  auto unfinished = [&](SolveStatus status) {
    return SolveOutcome{Method::alpha_method, status, it,
                        last ? std::optional<Natural>(from_u64(*last)) : std::nullopt,
                        std::nullopt};
  };
  while (up ? alpha < x0 : alpha >= lo) {
    if (it == max_iterations) return unfinished(SolveStatus::budget_exhausted);
    ++it;
    last = alpha;
    const std::uint64_t q = x0 - alpha;
    if (q > 1 && n % q == 0) {
      return factored(Method::alpha_method, it,
                      pair_from_divisor(ctx, from_u64(alpha), from_u64(q)));
    }
    const unsigned step = profile.step_from(static_cast<unsigned>(alpha % 10), dir);
    if (!up && alpha < step) break;
    alpha = up ? alpha + step : alpha - step;
  }
  return unfinished(SolveStatus::range_exhausted);
}

}  // namespace

std::string_view to_string(Method m) {
  return m == Method::c_method ? "c-method" : "alpha-method";
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::factored: return "ok";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
    case SolveStatus::trivial_only: return "trivial_only";
    case SolveStatus::range_exhausted: return "range_exhausted";
  }
  return "unknown";
}

SearchBudget::SearchBudget(std::uint64_t max_iterations) : max_iterations_(max_iterations) {
  if (max_iterations == 0) throw std::invalid_argument("search budget must be at least 1");
}

SolveOutcome c_method_solve(const FermatContext& ctx, const Natural& c_start, SearchBudget budget,
                            Backend backend) {
  if (ctx.n < 9) throw std::invalid_argument("c-method needs n >= 9");
  if (sgn(c_start) < 0) throw std::invalid_argument("c_start must be nonnegative");
  // Every square the scan can meet lies at x <= (n+1)/2, so for 64-bit n the
  // running x stays below 2^63 and Pc below 2^126.
  const bool narrow = backend == Backend::automatic && fits_u64(ctx.n) &&
                      ctx.x0 + c_start <= (ctx.n + 1) / 2;
  if (narrow) return c_scan_narrow(ctx, to_u64(c_start), budget.max_iterations());
  return c_scan_wide(ctx, c_start, budget.max_iterations());
}

SolveOutcome alpha_method_solve(const FermatContext& ctx, const SieveProfile& profile,
                                const Natural& alpha_start, Direction dir, SearchBudget budget,
                                Backend backend) {
  if (!alpha_range(ctx).contains(alpha_start)) {
    throw AlphaRangeError("alpha start " + to_decimal(alpha_start) + " outside the alpha range");
  }
  if (backend == Backend::automatic && fits_u64(ctx.n)) {
    return alpha_scan_narrow(ctx, profile, to_u64(alpha_start), dir, budget.max_iterations());
  }
  return alpha_scan_wide(ctx, profile, alpha_start, dir, budget.max_iterations());
}

}  // namespace fermatlab
