#pragma once

// The two instrumented searches.
//
// c-method: step c = c_start, c_start+1, ... until Pc is a perfect square.
// alpha-method: step through sieved alphas until q = X0 - alpha divides n.
//
// Both count every candidate they test, including the successful one, and
// both stop at a caller-supplied budget.

#include "fermatlab/context.hpp"
#include "fermatlab/sieve.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace fermatlab {

enum class Method { c_method, alpha_method };

enum class SolveStatus {
  factored,
  budget_exhausted,
  // c-method: the first square reached gives q = 1, so no nontrivial split
  // exists at or beyond c_start.
  trivial_only,
  // alpha-method: the scanned interval holds no nontrivial divisor.
  range_exhausted,
};

std::string_view to_string(Method m);
std::string_view to_string(SolveStatus s);

inline constexpr std::uint64_t kDefaultMaxIterations = 100'000'000;

class SearchBudget {
 public:
  /// Throws std::invalid_argument when max_iterations == 0.
  explicit SearchBudget(std::uint64_t max_iterations = kDefaultMaxIterations);
  std::uint64_t max_iterations() const { return max_iterations_; }

 private:
  std::uint64_t max_iterations_;
};

struct SolveResult {
  Method method;
  FactorPair factors;
  std::uint64_t iterations;

  const Natural& terminal_c() const { return factors.c; }
  const Natural& terminal_alpha() const { return factors.alpha; }
};

struct SolveOutcome {
  Method method = Method::c_method;
  SolveStatus status = SolveStatus::budget_exhausted;
  std::uint64_t iterations = 0;
  std::optional<Natural> last_tested;
  std::optional<SolveResult> result;  // set iff status == factored

  bool factored() const { return status == SolveStatus::factored; }
};

/// automatic uses a 64/128-bit word kernel whenever every value of the scan
/// fits; wide forces GMP arithmetic throughout. Results are identical.
enum class Backend { automatic, wide };

/// Requires n >= 9.
SolveOutcome c_method_solve(const FermatContext& ctx, const Natural& c_start, SearchBudget budget,
                            Backend backend = Backend::automatic);

/// Throws AlphaRangeError when alpha_start is outside the alpha range.
SolveOutcome alpha_method_solve(const FermatContext& ctx, const SieveProfile& profile,
                                const Natural& alpha_start, Direction dir, SearchBudget budget,
                                Backend backend = Backend::automatic);

}  // namespace fermatlab
