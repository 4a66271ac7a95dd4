#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace twofold {

/// Exact rational scalar. Every quantity in the engine is one of these;
/// no floating point participates in any decision.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;
using RatVec = std::vector<Rat>;

/// Parses "p/q", "p", or a finite decimal like "-2.75" into an exact rational.
/// Throws InvalidArgumentError on malformed input or zero denominator.
Rat parse_rational(std::string_view text);

/// Canonical lowest-terms rendering: "7/3", "-1/6", "5" (denominator 1 omitted).
std::string format_rational(const Rat& value);

/// Deterministic decimal rendering computed in integer arithmetic
/// (round half away from zero at `digits` fractional digits, trailing zeros trimmed).
std::string decimal_approx(const Rat& value, int digits = 12);

Rat dot(const RatVec& a, const RatVec& b);

/// Scales a rational vector to the primitive integer vector with the same
/// direction: multiplies by the lcm of denominators, divides by the gcd of
/// numerators. The zero vector is returned unchanged.
RatVec primitive_integer_direction(const RatVec& v);

}  // namespace twofold
