#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace fano {

// All coefficients in the library are exact rationals; the positivity
// criteria are boundary-sensitive, so there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-'). Throws PreconditionError on
/// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

Integer factorial(int n);
Integer binomial(int n, int k);

} // namespace fano
