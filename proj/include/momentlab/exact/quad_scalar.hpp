#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "momentlab/exact/rational.hpp"

namespace momentlab {

/// Exact element a + b*sqrt(d) of Q(sqrt(d)).
///
/// `d` is a squarefree integer different from 0; d = -1 gives the Gaussian
/// rationals. Pure rationals (b = 0) are stored with d = 1 and combine with
/// any radicand; combining two different radicands throws.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a, Rational b, long d);

  /// sqrt(d) itself.
  static QuadScalar sqrt_of(long d) { return QuadScalar(Rational(0), Rational(1), d); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  long radicand() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_.is_zero(); }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

  /// a - b*sqrt(d); complex conjugation when d = -1.
  QuadScalar conjugate() const;
  /// a^2 - b^2 d.
  Rational norm() const;
  QuadScalar inverse() const;

  /// Embedding with sqrt(d) > 0 for d > 0 and sqrt(-1) = +i.
  std::complex<double> to_complex() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs);

  friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
  friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
  friend QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
  friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

 private:
  void canonicalize() noexcept {
    if (b_.is_zero()) d_ = 1;
  }
  long merged_radicand(const QuadScalar& rhs) const;

  Rational a_;
  Rational b_;
  long d_ = 1;
};

inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }

/// Common radicand of two values (pure rationals are compatible with all).
long common_radicand(long d1, long d2);
bool is_squarefree(long d);

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

}  // namespace momentlab

namespace Eigen {

template <>
struct NumTraits<momentlab::QuadScalar> : GenericNumTraits<momentlab::QuadScalar> {
  using Real = momentlab::QuadScalar;
  using NonInteger = momentlab::QuadScalar;
  using Nested = momentlab::QuadScalar;
  using Literal = momentlab::QuadScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
