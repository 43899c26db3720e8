#pragma once

#include <map>

#include "momentlab/laurent/laurent_poly.hpp"

namespace momentlab {

/// c0 + sum_k (cos_k cos(k theta) + sin_k sin(k theta)), harmonics k >= 1.
/// Coefficients are real: rational, or a + b sqrt(d) with d > 0.
struct TrigPoly {
  QuadScalar constant;
  std::map<int, QuadScalar> cos_coeffs;
  std::map<int, QuadScalar> sin_coeffs;

  /// Drops zero entries; throws on harmonics < 1 or non-real coefficients.
  void normalize();
  int degree() const;

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;
};

/// Substitutes z = e^{i theta}: cos k -> (z^k + z^-k)/2, sin k -> (z^k - z^-k)/(2i).
/// Sine terms bring in sqrt(-1), so they cannot be combined with a real radical.
LaurentPoly trig_laurent(const TrigPoly& t);

/// Inverse of trig_laurent; throws std::invalid_argument unless is_real_type(p).
TrigPoly laurent_trig(const LaurentPoly& p);

}  // namespace momentlab
