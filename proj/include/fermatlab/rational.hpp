#pragma once

#include "fermatlab/numeric.hpp"

#include <compare>
#include <ostream>
#include <string>

namespace fermatlab {

/// Exact rational in lowest terms with a positive denominator. Every
/// constructor normalizes, so equality is structural.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(const Integer& value);  // NOLINT(google-explicit-constructor)
  ExactRational(long value) : ExactRational(Integer(value)) {}  // NOLINT
  /// Throws std::invalid_argument when denominator == 0.
  ExactRational(const Integer& numerator, const Integer& denominator);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  /// Floor of the value.
  Integer floor() const;

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  /// Throws std::domain_error on division by zero.
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace fermatlab
