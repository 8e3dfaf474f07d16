#include "fermatlab/rational.hpp"

#include <stdexcept>

namespace fermatlab {

ExactRational::ExactRational(const Integer& value) : value_(value) {}

ExactRational::ExactRational(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) throw std::invalid_argument("rational with zero denominator");
  value_.get_num() = numerator;
  value_.get_den() = denominator;
  value_.canonicalize();
}

Integer ExactRational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

std::string ExactRational::to_string() const {
  if (is_integer()) return to_decimal(value_.get_num());
  return to_decimal(value_.get_num()) + "/" + to_decimal(value_.get_den());
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (sgn(rhs.value_) == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational out = *this;
  out.value_ = -out.value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

}  // namespace fermatlab
