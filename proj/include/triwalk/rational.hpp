#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace triwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" with optional sign; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

/// Decimal string with 17 significant digits (lossless for double round-trips).
std::string to_decimal(double value);

/// "p/q" (or "p" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace triwalk
