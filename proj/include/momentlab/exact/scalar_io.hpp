#pragma once

#include <string>
#include <string_view>

#include "momentlab/exact/quad_scalar.hpp"

namespace momentlab {

// Text syntax: `p`, `p/q`, or `(a+b*sqrt(d))` with rational a, b.
// Whitespace is ignored; the printer output parses back to the same value.

std::string to_string(const Rational& x);
std::string to_string(const QuadScalar& x);

Rational parse_rational(std::string_view text);
QuadScalar parse_scalar(std::string_view text);

namespace detail {

// Cursor-based pieces shared with the Laurent and permutation parsers.
// `pos` is advanced past the consumed text; whitespace must already be removed.
Rational read_rational(std::string_view s, std::size_t& pos);
QuadScalar read_scalar(std::string_view s, std::size_t& pos);
std::string strip_spaces(std::string_view text);

}  // namespace detail

}  // namespace momentlab
