#include "momentlab/exact/quad_scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "momentlab/exact/scalar_io.hpp"

namespace momentlab {

bool is_squarefree(long d) {
  if (d == 0) return false;
  unsigned long u = static_cast<unsigned long>(d < 0 ? -d : d);
  for (unsigned long p = 2; p * p <= u; ++p) {
    if (u % (p * p) == 0) return false;
  }
  return true;
}

long common_radicand(long d1, long d2) {
  if (d1 == 1) return d2;
  if (d2 == 1 || d1 == d2) return d1;
  throw std::invalid_argument("incompatible radicands sqrt(" + std::to_string(d1) +
                              ") and sqrt(" + std::to_string(d2) + ")");
}

QuadScalar::QuadScalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_squarefree(d)) {
    throw std::invalid_argument("radicand " + std::to_string(d) + " is not squarefree");
  }
  if (d == 1) {
    a_ += b_;
    b_ = 0;
  }
  canonicalize();
}

long QuadScalar::merged_radicand(const QuadScalar& rhs) const {
  return common_radicand(d_, rhs.d_);
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadScalar::norm() const { return a_ * a_ - b_ * b_ * d_; }

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  const Rational n = norm();
  QuadScalar r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  r.canonicalize();
  return r;
}

std::complex<double> QuadScalar::to_complex() const {
  if (b_.is_zero()) return {a_.convert_to<double>(), 0.0};
  if (d_ < 0) {
    return {a_.convert_to<double>(), b_.convert_to<double>() * std::sqrt(static_cast<double>(-d_))};
  }
  const double root = std::sqrt(static_cast<double>(d_));
  const bool cancels = (a_.sign() > 0 && b_.sign() < 0) || (a_.sign() < 0 && b_.sign() > 0);
  if (!cancels) return {a_.convert_to<double>() + b_.convert_to<double>() * root, 0.0};
  // a + b r = (a^2 - b^2 d) / (a - b r); the denominator has no cancellation.
  const double num = norm().convert_to<double>();
  const double den = a_.convert_to<double>() - b_.convert_to<double>() * root;
  return {num / den, 0.0};
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  d_ = merged_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  canonicalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  d_ = merged_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  canonicalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  const long d = merged_radicand(rhs);
  if (rhs.b_.is_zero()) {
    a_ *= rhs.a_;
    b_ *= rhs.a_;
  } else if (b_.is_zero()) {
    b_ = a_ * rhs.b_;
    a_ *= rhs.a_;
  } else {
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
    b_ = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
  }
  d_ = d;
  canonicalize();
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (rhs.b_.is_zero()) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  merged_radicand(rhs);
  return *this *= rhs.inverse();
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << to_string(x); }

}  // namespace momentlab
