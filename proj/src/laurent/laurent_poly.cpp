#include "momentlab/laurent/laurent_poly.hpp"

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "momentlab/errors.hpp"
#include "momentlab/exact/scalar_io.hpp"

namespace momentlab {

LaurentPoly::LaurentPoly(QuadScalar constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

LaurentPoly LaurentPoly::monomial(QuadScalar c, int exponent) {
  LaurentPoly p;
  if (c.is_zero()) return p;
  p.low_ = exponent;
  p.c_.push_back(std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, const VectorX<QuadScalar>& coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_.assign(coeffs.data(), coeffs.data() + coeffs.size());
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first].is_zero()) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1].is_zero()) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<QuadScalar>(c_.begin() + static_cast<std::ptrdiff_t>(first),
                                 c_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

QuadScalar LaurentPoly::coeff(int exponent) const {
  if (c_.empty() || exponent < low_ || exponent > max_exponent()) return QuadScalar();
  return c_[static_cast<std::size_t>(exponent - low_)];
}

void LaurentPoly::set_coeff(int exponent, const QuadScalar& value) {
  if (c_.empty()) {
    if (value.is_zero()) return;
    low_ = exponent;
    c_.push_back(value);
    return;
  }
  if (exponent < low_) {
    if (value.is_zero()) return;
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - exponent), QuadScalar());
    low_ = exponent;
  } else if (exponent > max_exponent()) {
    if (value.is_zero()) return;
    c_.resize(static_cast<std::size_t>(exponent - low_ + 1));
  }
  c_[static_cast<std::size_t>(exponent - low_)] = value;
  trim();
}

std::vector<std::pair<int, QuadScalar>> LaurentPoly::terms() const {
  std::vector<std::pair<int, QuadScalar>> out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
  }
  return out;
}

VectorX<QuadScalar> LaurentPoly::dense(int lo, int hi) const {
  if (hi < lo) throw std::invalid_argument("empty exponent window");
  VectorX<QuadScalar> v(hi - lo + 1);
  for (int e = lo; e <= hi; ++e) v(e - lo) = coeff(e);
  return v;
}

long LaurentPoly::radicand() const {
  long d = 1;
  for (const auto& c : c_) d = common_radicand(d, c.radicand());
  return d;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> z) const {
  if (c_.empty()) return 0.0;
  std::complex<double> acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].to_complex();
  return acc * std::pow(z, low_);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.c_.empty()) return *this;
  if (c_.empty()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(max_exponent(), rhs.max_exponent());
  std::vector<QuadScalar> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) sum[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) sum[static_cast<std::size_t>(rhs.low_ - lo) + i] += rhs.c_[i];
  c_ = std::move(sum);
  low_ = lo;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  if (x.c_.empty() || y.c_.empty()) return out;
  out.low_ = x.low_ + y.low_;
  out.c_.assign(x.c_.size() + y.c_.size() - 1, QuadScalar());
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j].is_zero()) continue;
      out.c_[i + j] += x.c_[i] * y.c_[j];
    }
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const QuadScalar& c) {
  if (c.is_zero()) return *this = LaurentPoly();
  for (auto& x : c_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly derivative(const LaurentPoly& q) {
  LaurentPoly out;
  for (const auto& [e, c] : q.terms()) {
    if (e != 0) out.set_coeff(e - 1, c * QuadScalar(static_cast<long>(e)));
  }
  return out;
}

QuadScalar residue0(const LaurentPoly& f) { return f.coeff(-1); }

QuadScalar moment(const LaurentPoly& p, const LaurentPoly& q, unsigned k) {
  // Res_0(P^k Q') = sum_e e a_e [z^-e] P^k
  const LaurentPoly pk = pow(p, k);
  QuadScalar total;
  for (const auto& [e, c] : q.terms()) {
    if (e == 0) continue;
    const QuadScalar pc = pk.coeff(-e);
    if (!pc.is_zero()) total += QuadScalar(static_cast<long>(e)) * c * pc;
  }
  return total;
}

MatrixX<QuadScalar> moment_matrix(const LaurentPoly& p, int lo, int hi, unsigned kmax) {
  if (hi < lo) throw std::invalid_argument("empty exponent window");
  MatrixX<QuadScalar> m(static_cast<Eigen::Index>(kmax) + 1, hi - lo + 1);
  LaurentPoly pk(1);
  for (unsigned k = 0; k <= kmax; ++k) {
    for (int e = lo; e <= hi; ++e) {
      const QuadScalar c = e == 0 ? QuadScalar() : pk.coeff(-e);
      m(static_cast<Eigen::Index>(k), e - lo) = c.is_zero() ? c : QuadScalar(static_cast<long>(e)) * c;
    }
    if (k < kmax) pk *= p;
  }
  return m;
}

int power_substitution(const LaurentPoly& p) {
  int g = 0;
  for (const auto& [e, c] : p.terms()) g = std::gcd(g, e);
  return g;
}

LaurentPoly substitute_power(const LaurentPoly& p, int l) {
  if (l < 1) throw std::invalid_argument("power substitution needs l >= 1");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.set_coeff(e * l, c);
  return out;
}

PowerReduction reduce_by_power(const LaurentPoly& p, const LaurentPoly& q, int l) {
  if (l < 1) throw std::invalid_argument("reduction needs l >= 1");
  PowerReduction out;
  out.l = l;
  for (const auto& [e, c] : p.terms()) {
    if (e % l != 0) throw std::invalid_argument("exponent " + std::to_string(e) + " of P is not divisible by " + std::to_string(l));
    out.p.set_coeff(e / l, c);
  }
  for (const auto& [e, c] : q.terms()) {
    if (e % l == 0) {
      out.q.set_coeff(e / l, c);
    } else {
      out.r.set_coeff(e, c);
    }
  }
  return out;
}

LaurentPoly compose_outer(const LaurentPoly& s, const LaurentPoly& w) {
  if (s.is_zero()) return s;
  if (s.min_exponent() < 0) throw std::invalid_argument("outer polynomial has negative exponents");
  LaurentPoly acc;
  for (int e = s.max_exponent(); e >= 0; --e) {
    acc = acc * w + LaurentPoly(s.coeff(e));
  }
  return acc;
}

LaurentPoly conj_reciprocal(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.set_coeff(-e, c.radicand() == -1 ? c.conjugate() : c);
  return out;
}

bool is_real_type(const LaurentPoly& p) { return conj_reciprocal(p) == p; }

std::string to_string(const LaurentPoly& p) {
  const auto ts = p.terms();
  if (ts.empty()) return "0";
  std::string out;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.is_rational() && c.a().sign() < 0;
    if (it == ts.rbegin()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += to_string(negative ? -c : c) + "*z^" + std::to_string(e);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  std::string body;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == '#') continue;
      body += line;
      body += ' ';
    }
  }
  const std::string s = detail::strip_spaces(body);
  if (s.empty()) throw ParseError("empty Laurent polynomial");
  LaurentPoly out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos) + " in '" + s + "'");
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    if (pos >= s.size()) fail("dangling sign");
    QuadScalar c(1);
    bool has_z = false;
    if (s[pos] == 'z') {
      has_z = true;
      ++pos;
    } else {
      c = detail::read_scalar(s, pos);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'z') fail("expected 'z' after '*'");
        ++pos;
        has_z = true;
      }
    }
    int e = 0;
    if (has_z) {
      e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const bool paren = pos < s.size() && s[pos] == '(';
        if (paren) ++pos;
        const Rational r = detail::read_rational(s, pos);
        if (denominator(r) != 1) fail("fractional exponent");
        if (abs(r) > Rational(1'000'000)) fail("exponent out of range");
        e = numerator(r).convert_to<int>();
        if (paren) {
          if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
          ++pos;
        }
      }
    }
    if (sign < 0) c = -c;
    out += LaurentPoly::monomial(c, e);
  }
  return out;
}

LaurentPoly read_laurent_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_laurent(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace momentlab
