#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordfix {

// Arbitrary precision so that long geometric parameter sequences stay exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer, or a finite decimal such as "0.49" or "-1.25e-3"
/// into the exact rational it denotes. Throws Error(BadParams) otherwise.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact conversion: every finite double is a dyadic rational.
Rational from_double(double value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace ordfix
