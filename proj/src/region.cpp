#include "fermatlab/region.hpp"

#include "fermatlab/errors.hpp"

#include "json.hpp"

#include <stdexcept>
#include <utility>

namespace fermatlab {

namespace {

const ExactRational kTwoFifths(Integer(2), Integer(5));

bool alpha_side(const FermatContext& ctx, const Natural& alpha) {
  return alpha < ctx.x0 && derivative_ratio(ctx, alpha) >= kTwoFifths;
}

}  // namespace

Natural boundary_paper(const FermatContext& ctx) {
  return round_div(255 * ctx.x0, 1000, Rounding::half_up);
}

Natural boundary_exact(const FermatContext& ctx) {
  Natural alpha = ctx.x0 - isqrt(5 * ctx.n / 9);
  while (sgn(alpha) > 0 && alpha_side(ctx, Natural(alpha - 1))) --alpha;
  while (alpha < ctx.x0 && !alpha_side(ctx, alpha)) ++alpha;
  return alpha;
}

Natural boundary(const FermatContext& ctx, BoundMode mode) {
  return mode == BoundMode::paper ? boundary_paper(ctx) : boundary_exact(ctx);
}

ExactRational derivative_ratio(const FermatContext& ctx, const Natural& alpha) {
  if (alpha >= ctx.x0) throw std::domain_error("derivative undefined for alpha >= X0");
  const Natural t = ctx.x0 - alpha;
  return ExactRational(derivative_numerator(ctx, alpha), 2 * t * t);
}

Method classify(const FermatContext& ctx, const Natural& alpha, BoundMode mode) {
  if (!alpha_range(ctx).contains(alpha)) {
    throw AlphaRangeError("alpha " + to_decimal(alpha) + " outside the alpha range");
  }
  return alpha >= boundary(ctx, mode) ? Method::alpha_method : Method::c_method;
}

RegionReport region_report(const FermatContext& ctx, BoundMode mode) {
  RegionReport r;
  r.n = ctx.n;
  r.x0 = ctx.x0;
  r.p0 = ctx.p0;
  r.mode = mode;
  r.boundary_paper = boundary_paper(ctx);
  r.boundary_exact = boundary_exact(ctx);
  r.alpha_cap_paper = *balanced_alpha_max(ctx, BoundMode::paper);
  return r;
}

RegionReport effectiveness_report(const FermatContext& ctx, const Natural& p, const Natural& q,
                                  BoundMode mode) {
  if (p * q != ctx.n) {
    throw std::invalid_argument(to_decimal(p) + " * " + to_decimal(q) + " != " + to_decimal(ctx.n));
  }
  const Natural& big = p >= q ? p : q;
  const Natural& small = p >= q ? q : p;

  RegionReport r = region_report(ctx, mode);
  RegionReport::Witness w;
  w.p = big;
  w.q = small;
  w.true_c = (big + small) / 2 - ctx.x0;
  w.true_alpha = (big - small) / 2 - w.true_c;
  w.z = w.true_alpha >= r.boundary_paper ? Natural(w.true_alpha - r.boundary_paper) : Natural(0);
  w.sieved_iterations = round_div(2 * w.z, 5, Rounding::floor);
  w.delta = w.true_c - w.sieved_iterations;
  w.predicted_better = alpha_range(ctx).contains(w.true_alpha)
                           ? classify(ctx, w.true_alpha, mode)
                           : Method::c_method;
  r.witness = std::move(w);
  return r;
}

std::string_view to_string(BoundMode mode) { return mode == BoundMode::paper ? "paper" : "exact"; }

std::string to_json(const RegionReport& report) {
  nlohmann::ordered_json j;
  j["n"] = to_decimal(report.n);
  j["x0"] = to_decimal(report.x0);
  j["p0"] = to_decimal(report.p0);
  j["mode"] = to_string(report.mode);
  j["boundary_paper"] = to_decimal(report.boundary_paper);
  j["boundary_exact"] = to_decimal(report.boundary_exact);
  j["alpha_cap_paper"] = to_decimal(report.alpha_cap_paper);
  if (report.witness) {
    const auto& w = *report.witness;
    j["p"] = to_decimal(w.p);
    j["q"] = to_decimal(w.q);
    j["true_c"] = to_decimal(w.true_c);
    j["true_alpha"] = to_decimal(w.true_alpha);
    j["z"] = to_decimal(w.z);
    j["sieved_iterations"] = to_decimal(w.sieved_iterations);
    j["delta"] = to_decimal(w.delta);
    j["predicted_better"] = to_string(w.predicted_better);
  }
  return j.dump(2);
}

}  // namespace fermatlab
