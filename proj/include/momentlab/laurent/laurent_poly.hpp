#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momentlab/exact/linalg.hpp"
#include "momentlab/exact/quad_scalar.hpp"

namespace momentlab {

/// Finite sum of a_k z^k with QuadScalar coefficients.
///
/// Stored densely from the lowest to the highest nonzero exponent; interior
/// zeros are allowed, the two ends never are. The zero polynomial has no
/// coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(QuadScalar constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(QuadScalar(constant)) {}  // NOLINT

  static LaurentPoly monomial(QuadScalar c, int exponent);
  /// z itself.
  static LaurentPoly z() { return monomial(QuadScalar(1), 1); }
  /// Coefficients `coeffs(i)` of z^(low + i).
  static LaurentPoly from_dense(int low, const VectorX<QuadScalar>& coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  /// Lowest / highest exponent with a nonzero coefficient (0 for the zero polynomial).
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return c_.empty() ? 0 : low_ + static_cast<int>(c_.size()) - 1; }
  QuadScalar coeff(int exponent) const;
  void set_coeff(int exponent, const QuadScalar& value);

  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<int, QuadScalar>> terms() const;
  /// Coefficients on the window [lo, hi] (zeros outside the support).
  VectorX<QuadScalar> dense(int lo, int hi) const;

  /// Highest exponent n and minus the lowest exponent m.
  int n() const noexcept { return max_exponent(); }
  int m() const noexcept { return -min_exponent(); }
  /// Both a positive and a negative exponent occur.
  bool is_proper() const noexcept { return max_exponent() > 0 && min_exponent() < 0; }

  /// Common radicand of all coefficients (1 when all are rational).
  long radicand() const;

  std::complex<double> evaluate(std::complex<double> z) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const QuadScalar& c);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(LaurentPoly x, const QuadScalar& c) { return x *= c; }
  friend LaurentPoly operator*(const QuadScalar& c, LaurentPoly x) { return x *= c; }
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    return x.low_ == y.low_ && x.c_ == y.c_;
  }
  friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

 private:
  void trim();

  int low_ = 0;
  std::vector<QuadScalar> c_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);
LaurentPoly derivative(const LaurentPoly& q);
/// Coefficient of z^-1.
QuadScalar residue0(const LaurentPoly& f);

/// Res_0(P^k Q'), the contour integral of P^k dQ over |z| = 1 divided by 2 pi i.
QuadScalar moment(const LaurentPoly& p, const LaurentPoly& q, unsigned k);
/// moment(p, z^e, k) = e [z^-e] P^k for every e in [lo, hi] and k in [0, kmax],
/// as a (kmax+1) x (hi-lo+1) matrix.
MatrixX<QuadScalar> moment_matrix(const LaurentPoly& p, int lo, int hi, unsigned kmax);

/// Largest l with every exponent of p divisible by l (0 for constants).
int power_substitution(const LaurentPoly& p);
/// p(z^l).
LaurentPoly substitute_power(const LaurentPoly& p, int l);

struct PowerReduction {
  LaurentPoly p;  // P~ with P(z) = P~(z^l)
  LaurentPoly q;  // Q~ from the exponents of Q divisible by l
  LaurentPoly r;  // the remaining terms of Q
  int l = 1;
};

/// Throws std::invalid_argument when l does not divide every exponent of p.
PowerReduction reduce_by_power(const LaurentPoly& p, const LaurentPoly& q, int l);

/// S(W) by Horner; S must have no negative exponents.
LaurentPoly compose_outer(const LaurentPoly& s, const LaurentPoly& w);

/// conj(P)(1/z): coefficients conjugated only in the d = -1 regime.
LaurentPoly conj_reciprocal(const LaurentPoly& p);
bool is_real_type(const LaurentPoly& p);

/// `c*z^e` terms in descending exponent order, e.g. `1*z^2 - 3/2*z^0`.
std::string to_string(const LaurentPoly& p);
/// Accepts the printer's output and looser input: `z`, `z^-2`, `3*z`, `-z^2`,
/// bare constants. Lines starting with '#' are comments.
LaurentPoly parse_laurent(std::string_view text);
/// Reads a `.lp` file; a missing file is a ParseError.
LaurentPoly read_laurent_file(const std::string& path);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace momentlab
