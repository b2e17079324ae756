#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lfvop {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Stored in lowest terms with a positive denominator;
/// all arithmetic and comparisons are exact. Dividing by zero throws.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. Throws ZeroDenominator if den == 0;
/// negative denominators are folded into the numerator sign.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "123", "-4", "p/q" and exact decimal literals ("0.25" -> 1/4).
/// Surrounding whitespace is ignored. Throws ParseError on anything else;
/// exponent notation is deliberately not accepted.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
/// Round-trips through parse_rational.
std::string to_string(const Rational& value);

}  // namespace lfvop
