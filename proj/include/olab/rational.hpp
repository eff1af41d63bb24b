#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace olab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar for every verdict-bearing computation. cpp_rational
// keeps the canonical form (lowest terms, positive denominator) after every
// operation; floats are confined to Monte Carlo sampling and diagnostics.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer "p". Throws Error(input) on malformed text
// or zero denominator.
Rational parse_rational(const std::string& text);

// Always renders as "p/q" with q >= 1, e.g. "3/1", "-1/2". This is the
// canonical on-disk form.
std::string fraction_string(const Rational& r);

double to_double(const Rational& r);

Rational rational_pow(const Rational& base, unsigned exp);

}  // namespace olab
