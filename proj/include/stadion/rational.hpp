#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace stadion {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always normalized (lowest terms, den > 0).
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" form; the denominator is always written, even when it is 1.
std::string to_string(const Rational& q);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

/// Exact rational value of a finite double.
Rational exact_rational(double x);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace stadion
