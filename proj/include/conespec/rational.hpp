#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace conespec {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "a", "-a", "+a" or "a/b". Throws Error(Parse) on anything else.
Rational parse_rational(std::string_view text);

/// Parses a decimal such as "0.25" or "1e-3" exactly (as the rational it denotes).
Rational parse_decimal(std::string_view text);

std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace conespec
