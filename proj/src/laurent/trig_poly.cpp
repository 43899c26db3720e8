#include "momentlab/laurent/trig_poly.hpp"

#include <stdexcept>

namespace momentlab {

namespace {

bool is_real(const QuadScalar& c) { return c.is_rational() || c.radicand() > 0; }

void prune(std::map<int, QuadScalar>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->first < 1) throw std::invalid_argument("trigonometric harmonics start at 1");
    if (!is_real(it->second)) throw std::invalid_argument("trigonometric coefficients must be real");
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
  }
}

const QuadScalar& imag_unit() {
  static const QuadScalar i = QuadScalar::sqrt_of(-1);
  return i;
}

}  // namespace

void TrigPoly::normalize() {
  if (!is_real(constant)) throw std::invalid_argument("trigonometric coefficients must be real");
  prune(cos_coeffs);
  prune(sin_coeffs);
}

int TrigPoly::degree() const {
  int d = 0;
  for (const auto& [k, c] : cos_coeffs) {
    if (!c.is_zero()) d = std::max(d, k);
  }
  for (const auto& [k, c] : sin_coeffs) {
    if (!c.is_zero()) d = std::max(d, k);
  }
  return d;
}

LaurentPoly trig_laurent(const TrigPoly& t) {
  TrigPoly u = t;
  u.normalize();
  const QuadScalar half(Rational(1, 2));
  LaurentPoly out(u.constant);
  for (const auto& [k, c] : u.cos_coeffs) {
    out += LaurentPoly::monomial(half * c, k) + LaurentPoly::monomial(half * c, -k);
  }
  // 1/(2i) = -i/2
  const QuadScalar minus_half_i = -half * imag_unit();
  for (const auto& [k, c] : u.sin_coeffs) {
    out += LaurentPoly::monomial(minus_half_i * c, k) - LaurentPoly::monomial(minus_half_i * c, -k);
  }
  return out;
}

TrigPoly laurent_trig(const LaurentPoly& p) {
  if (!is_real_type(p)) throw std::invalid_argument("not of real type: " + to_string(p));
  TrigPoly t;
  t.constant = p.coeff(0);
  const int top = std::max(p.max_exponent(), -p.min_exponent());
  for (int k = 1; k <= top; ++k) {
    const QuadScalar plus = p.coeff(k);
    const QuadScalar minus = p.coeff(-k);
    // a_k = (c - i s)/2, a_-k = (c + i s)/2
    t.cos_coeffs[k] = plus + minus;
    t.sin_coeffs[k] = imag_unit() * (plus - minus);
  }
  t.normalize();
  return t;
}

}  // namespace momentlab
