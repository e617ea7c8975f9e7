#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace collide {

// Exact arithmetic for the algebraic identity checks. Arbitrary precision so
// ingested data with large denominators cannot overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", plain integers, and fixed/scientific decimals ("-0.5",
// "1.25e-3"). Throws ConfigError on anything else.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1. parse_rational round-trips it.
std::string format_rational(const Rational& value);

double rational_to_double(const Rational& value);

}  // namespace collide
