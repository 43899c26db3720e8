#include "momentlab/exact/scalar_io.hpp"

#include <cctype>
#include <optional>

#include "momentlab/errors.hpp"

namespace momentlab {

std::string to_string(const Rational& x) { return x.str(); }

std::string to_string(const QuadScalar& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string out = "(" + to_string(x.a());
  out += x.b().sign() < 0 ? "-" : "+";
  out += to_string(Rational(abs(x.b())));
  out += "*sqrt(" + std::to_string(x.radicand()) + "))";
  return out;
}

namespace detail {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

namespace {

bool starts_with(std::string_view s, std::size_t pos, std::string_view prefix) {
  return s.substr(pos, prefix.size()) == prefix;
}

std::string read_digits(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) {
    throw ParseError("expected digits at offset " + std::to_string(start) + " in '" +
                     std::string(s) + "'");
  }
  return std::string(s.substr(start, pos - start));
}

long read_radical(std::string_view s, std::size_t& pos) {
  pos += 5;  // "sqrt("
  bool negative = false;
  if (pos < s.size() && s[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::string digits = read_digits(s, pos);
  if (pos >= s.size() || s[pos] != ')') throw ParseError("unterminated sqrt( in '" + std::string(s) + "'");
  ++pos;
  long d = std::stol(digits);
  return negative ? -d : d;
}

}  // namespace

Rational read_rational(std::string_view s, std::size_t& pos) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  Integer num(read_digits(s, pos));
  Integer den(1);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = Integer(read_digits(s, pos));
    if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(s) + "'");
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

QuadScalar read_scalar(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw ParseError("expected a scalar");
  if (s[pos] != '(') return QuadScalar(read_rational(s, pos));
  ++pos;
  Rational a(0);
  Rational b(0);
  std::optional<long> radicand;
  bool first = true;
  while (true) {
    if (pos >= s.size()) throw ParseError("unterminated '(' in '" + std::string(s) + "'");
    if (s[pos] == ')') {
      if (first) throw ParseError("empty parentheses in '" + std::string(s) + "'");
      ++pos;
      break;
    }
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(pos) + " in '" +
                       std::string(s) + "'");
    }
    first = false;
    Rational coef(1);
    bool has_coef = false;
    if (!starts_with(s, pos, "sqrt(")) {
      coef = read_rational(s, pos);
      has_coef = true;
    }
    if (has_coef && starts_with(s, pos, "*sqrt(")) ++pos;
    if (starts_with(s, pos, "sqrt(")) {
      const long d = read_radical(s, pos);
      if (radicand && *radicand != d) throw ParseError("two different radicands in '" + std::string(s) + "'");
      radicand = d;
      b += sign * coef;
    } else {
      a += sign * coef;
    }
  }
  if (!radicand) return QuadScalar(a);
  try {
    return QuadScalar(a, b, *radicand);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

Rational parse_rational(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  std::size_t pos = 0;
  Rational r = detail::read_rational(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters in '" + s + "'");
  return r;
}

QuadScalar parse_scalar(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  std::size_t pos = 0;
  QuadScalar r = detail::read_scalar(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters in '" + s + "'");
  return r;
}

}  // namespace momentlab
