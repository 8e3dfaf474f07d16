#pragma once

// Where each search needs fewer candidate tests.
//
// One c-step moves c by 1; one sieved alpha-step moves alpha by 10/4 on
// average, so the alpha-scan pulls ahead once dc/dalpha >= 2/5. With
// t = X0 - alpha the condition reduces to 9*t^2 <= 5*n, giving the exact
// boundary alpha >= X0 - isqrt(floor(5n/9)) ~ (1 - sqrt(5/9))*X0 ~ 0.2546*X0.
// The published constant 0.255*X0 is kept alongside as "paper" mode.

#include "fermatlab/context.hpp"
#include "fermatlab/rational.hpp"
#include "fermatlab/solvers.hpp"

#include <optional>
#include <string>

namespace fermatlab {

/// round-half-up(255 * x0 / 1000).
Natural boundary_paper(const FermatContext& ctx);

/// Smallest alpha with derivative_ratio(alpha) >= 2/5.
Natural boundary_exact(const FermatContext& ctx);

Natural boundary(const FermatContext& ctx, BoundMode mode);

/// (-alpha^2 + 2*x0*alpha - p0) / (2*(x0 - alpha)^2). Throws std::domain_error
/// when alpha >= x0.
ExactRational derivative_ratio(const FermatContext& ctx, const Natural& alpha);

/// alpha-method iff alpha >= boundary(mode). Throws AlphaRangeError outside
/// the alpha range.
Method classify(const FermatContext& ctx, const Natural& alpha, BoundMode mode);

struct RegionReport {
  Natural n;
  Natural x0;
  Natural p0;
  BoundMode mode = BoundMode::paper;
  Natural boundary_paper;
  Natural boundary_exact;
  Natural alpha_cap_paper;  // floor(3*x0/10)

  // Populated only when the factorization is known.
  struct Witness {
    Natural p;
    Natural q;
    Natural true_c;
    Natural true_alpha;
    Natural z;                  // true_alpha - boundary_paper, clamped at 0
    Natural sieved_iterations;  // floor(2z/5)
    Integer delta;              // true_c - sieved_iterations
    Method predicted_better;
  };
  std::optional<Witness> witness;
};

/// Boundaries only, for a modulus with unknown factors.
RegionReport region_report(const FermatContext& ctx, BoundMode mode = BoundMode::paper);

/// Full report. Throws std::invalid_argument when p*q != n. Factor order is
/// normalized to p >= q.
RegionReport effectiveness_report(const FermatContext& ctx, const Natural& p, const Natural& q,
                                  BoundMode mode = BoundMode::paper);

/// JSON object with every number as a decimal string.
std::string to_json(const RegionReport& report);

std::string_view to_string(BoundMode mode);

}  // namespace fermatlab
