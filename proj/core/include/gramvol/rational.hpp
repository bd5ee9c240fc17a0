#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace gramvol {

// All coefficient arithmetic is exact. mpq keeps values canonical:
// reduced to lowest terms, denominator positive.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-'. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

// Exact square root when r is the square of a rational, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace gramvol
