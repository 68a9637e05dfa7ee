#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace soscert {

// Exact arbitrary-precision rational, always in lowest terms with a
// positive denominator. GMP's mpq_class already maintains both invariants
// for every arithmetic result; the helpers below cover construction from
// text and conversion back.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a", or "a/b" (b > 0 after normalization).
Rational rational_from_string(std::string_view text);

// Canonical text: "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Best rational approximation of x with denominator <= max_den,
// via continued-fraction convergents/semiconvergents of the exact
// binary value of x.
Rational rational_round(double x, const Integer& max_den);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace soscert
