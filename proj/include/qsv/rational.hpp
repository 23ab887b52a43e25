#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qsv {

// Exact rational scalar; always canonical.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q", "-p/q" with optional surrounding spaces.
Rational parse_rational(const std::string& text);

// "p/q", or "p" for integers.
std::string to_string(const Rational& r);

Rational pow(const Rational& base, long exp);

Rational abs(const Rational& r);

// Approximate log2|r|; -inf for zero.
double log2_abs(const Rational& r);

// Upper bound for |r| as a double (never below the true value unless it overflows).
double upper_double(const Rational& r);

// Smallest dyadic >= r with about `bits` significant bits; r >= 0.
Rational round_up_dyadic(const Rational& r, int bits);

// Nearest-below dyadic with `bits` significant bits; sets err to an upper bound on the error.
Rational round_dyadic(const Rational& r, int bits, Rational& err);

// Exact rational from a finite double.
Rational from_double(double x);

// Bit size of numerator plus denominator.
std::size_t bit_size(const Rational& r);

}  // namespace qsv
