#pragma once

#include <complex>
#include <vector>

#include "momentlab/laurent/laurent_poly.hpp"
#include "momentlab/perm/permutation.hpp"

namespace momentlab {

using Complex = std::complex<double>;

/// Numeric tolerances. The defaults are the ones the acceptance tests pin.
struct NumericConfig {
  double residual_tol = 1e-12;      // |P(z) - t| relative to the size of the terms
  double cluster_tol = 1e-8;        // critical values, relative
  double position_tol = 1e-3;       // critical points over one value, relative
  double large_t_factor = 1e3;      // threshold = factor * (1 + max|a_k|)^2
  int max_threshold_doublings = 20;
  int samples_per_quarter = 64;     // initial samples per quarter turn of a circle
  int max_halvings = 20;
  double match_tol = 1e-3;          // two roots this close to one target is ambiguous
  double step_safety = 0.25;        // root movement / nearest-neighbour distance
};

/// Laurent polynomial with coefficients embedded in C (sqrt(d) > 0, sqrt(-1) = i).
struct NumericLaurent {
  int low = 0;
  std::vector<Complex> coeffs;  // coeffs[i] is the coefficient of z^(low + i)

  explicit NumericLaurent(const LaurentPoly& p);
  int n() const { return low + static_cast<int>(coeffs.size()) - 1; }
  int m() const { return -low; }
  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  /// Sum of |a_k z^k|, the scale residuals are measured against.
  double magnitude(Complex z) const;
  double max_coeff() const;
};

/// Roots of a polynomial sum c[k] z^k, via companion-matrix eigenvalues.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& c);

struct Fiber {
  Complex t;
  std::vector<Complex> roots;
};

/// The n + m solutions of P(z) = t, Newton-polished. Throws std::invalid_argument
/// unless P is proper, NumericFailure when the residual bound is missed.
Fiber fiber_roots(const LaurentPoly& p, Complex t, const NumericConfig& config = {});
Fiber fiber_roots(const NumericLaurent& p, Complex t, const NumericConfig& config = {});

/// Newton on P(z) = t from z0; returns false when it does not converge.
bool polish_root(const NumericLaurent& p, Complex t, Complex& z, const NumericConfig& config);

/// |t| from which the n large and m small roots separate cleanly.
double large_t_threshold(const LaurentPoly& p, const NumericConfig& config = {});

struct InfinitySplit {
  std::vector<Complex> near_infinity;  // n roots
  std::vector<Complex> near_zero;      // m roots
};

/// Splits the fiber by modulus; throws NumericFailure when the gap between
/// the n-th and (n+1)-th largest root is not clear.
InfinitySplit classify_at_infinity(const LaurentPoly& p, Complex t, const NumericConfig& config = {});

struct CycleSum {
  Complex value;
  double scale = 0;  // sum of |weighted terms|

  double relative() const { return scale > 0 ? std::abs(value) / scale : std::abs(value); }
};

/// m * sum_{near inf} Q(z) - n * sum_{near 0} Q(z).
CycleSum cycle_sum(const LaurentPoly& p, const LaurentPoly& q, Complex t, const NumericConfig& config = {});

struct CriticalValue {
  Complex value;
  std::vector<Complex> points;  // distinct critical points over the value
  CycleShape shape;             // padded with 1's to n + m
};

struct CriticalData {
  std::vector<CriticalValue> values;  // sorted by argument, then modulus
};

CriticalData critical_data(const LaurentPoly& p, const NumericConfig& config = {});

}  // namespace momentlab
