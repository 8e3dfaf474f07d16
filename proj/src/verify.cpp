#include "fermatlab/verify.hpp"

#include "fermatlab/context.hpp"
#include "fermatlab/region.hpp"

#include <algorithm>

namespace fermatlab {

bool VerifyReport::passed() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.match(); });
}

VerifyReport verify_example() {
  namespace ex = worked_example;
  const FermatContext ctx = make_context(parse_natural(ex::n));
  const RegionReport report =
      effectiveness_report(ctx, parse_natural(ex::p), parse_natural(ex::q), BoundMode::paper);
  const auto& w = *report.witness;

  VerifyReport out;
  auto add = [&](std::string name, std::string_view expected, const Integer& actual) {
    out.entries.push_back({std::move(name), std::string(expected), to_decimal(actual)});
  };
  add("X0", ex::x0, ctx.x0);
  add("P0", ex::p0, ctx.p0);
  add("c", ex::c, w.true_c);
  add("alpha", ex::alpha, w.true_alpha);
  add("0.255*X0", ex::boundary, report.boundary_paper);
  add("z", ex::z, w.z);
  add("0.4z", ex::sieved, w.sieved_iterations);
  add("c-0.4z", ex::delta, w.delta);

  // The witness must also reproduce the factors through the c/alpha algebra.
  const FactorPair pair = recover_factors(ctx, w.true_c, w.true_alpha);
  add("p", ex::p, pair.p);
  add("q", ex::q, pair.q);
  return out;
}

}  // namespace fermatlab
