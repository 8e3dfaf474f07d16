#pragma once

#include <stdexcept>

namespace fermatlab {

/// The modulus is even; divide out the 2 first.
struct EvenModulusError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The modulus shares a factor with 10, so the last-digit sieve has no premise.
struct TriviallyFactorableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A (c, alpha) pair that does not solve the Fermat equation for the context.
struct InvalidWitnessError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An alpha (or alpha interval) outside [ceil(sqrt(P0)), X0).
struct AlphaRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

}  // namespace fermatlab
