#pragma once

// Algebra of Fermat's method for an odd modulus n.
//
// With X0 = ceil(sqrt(n)) and P0 = X0^2 - n, stepping x = X0 + c gives
//   Pc = (X0 + c)^2 - n = c^2 + 2*X0*c + P0,
// and a factorization is found when Pc is a square. Writing Pc = (c + alpha)^2
// turns the search around: c = (alpha^2 - P0) / (2*(X0 - alpha)), which is
// integral exactly when q = X0 - alpha divides n.

#include "fermatlab/numeric.hpp"
#include "fermatlab/rational.hpp"

#include <optional>

namespace fermatlab {

struct FermatContext {
  Natural n;
  Natural x0;  // ceil(sqrt(n))
  Natural p0;  // x0^2 - n
  ExactRational k;  // p0 / x0^2
};

/// Nontrivial or trivial factorization witness: p = x0 + 2c + alpha, q = x0 - alpha.
struct FactorPair {
  Natural p;
  Natural q;
  Natural c;
  Natural alpha;

  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

/// Throws EvenModulusError for even n, std::invalid_argument for n < 3.
FermatContext make_context(const Natural& n);

/// c^2 + 2*x0*c + p0.
Natural compute_pc(const FermatContext& ctx, const Natural& c);

/// Integral c for alpha, or nullopt if 2*(x0 - alpha) does not divide
/// alpha^2 - p0. Throws AlphaRangeError outside [ceil(sqrt(p0)), x0).
std::optional<Natural> alpha_to_c(const FermatContext& ctx, const Natural& alpha);

/// alpha with Pc = (c + alpha)^2, or nullopt if Pc is not a square.
std::optional<Natural> c_to_alpha(const FermatContext& ctx, const Natural& c);

/// Throws InvalidWitnessError when alpha_to_c(ctx, alpha) != c.
FactorPair recover_factors(const FermatContext& ctx, const Natural& c, const Natural& alpha);

/// -alpha^2 + 2*x0*alpha - p0; its sign is the sign of dc/dalpha.
Integer derivative_numerator(const FermatContext& ctx, const Natural& alpha);

struct RhoForm {
  ExactRational rho;  // alpha / x0
  ExactRational c;    // (x0/2) * ((1-k)/(1-rho) - (1+rho))
};

/// Normalized form of c in terms of rho = alpha/x0 and k = p0/x0^2.
/// Throws std::domain_error when alpha >= x0.
RhoForm rho_form(const FermatContext& ctx, const Natural& alpha);

/// c = (alpha^2 - p0) / (2*(x0 - alpha)) as an exact rational, no range check
/// beyond alpha < x0.
ExactRational c_of_alpha(const FermatContext& ctx, const Natural& alpha);

struct AlphaRange {
  Natural min;            // ceil(sqrt(p0))
  Natural max_exclusive;  // x0

  bool contains(const Natural& alpha) const { return alpha >= min && alpha < max_exclusive; }
};

AlphaRange alpha_range(const FermatContext& ctx);

/// Largest c >= 0 with 9*Pc < (x0 + c)^2, i.e. the last step at which
/// p < 2q is still possible. nullopt when even c = 0 fails.
/// Throws std::invalid_argument when n is a perfect square.
std::optional<Natural> balanced_c_max(const FermatContext& ctx);

enum class BoundMode { paper, exact };

/// paper: floor(3*x0/10), the approximate exclusive cap on alpha for
/// balanced moduli. exact: the largest alpha in range whose rational c still
/// satisfies 9*Pc < Xc^2, or nullopt if none does.
std::optional<Natural> balanced_alpha_max(const FermatContext& ctx, BoundMode mode);

}  // namespace fermatlab
