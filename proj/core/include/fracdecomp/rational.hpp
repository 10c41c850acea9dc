#pragma once

#include <string>
#include <string_view>

#include "fracdecomp/types.hpp"

namespace fracdecomp {

// Canonical "p/q" form, always with a denominator ("0/1", "3/1").
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "p/q" or an integer. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

Rational abs(const Rational& q);

// Exact comparisons against sqrt(r).

// t <= sqrt(r) + c
bool le_sqrt_plus(long t, long r, long c);
// t >= sqrt(r)
bool ge_sqrt(long t, long r);

// a <= b / r^{3/2} for a >= 0, b > 0.
bool le_over_r_three_halves(const Rational& a, const Rational& b, long r);

}  // namespace fracdecomp
