#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ocb {

using Integer = mpz_class;
// gmpxx keeps results of arithmetic canonical (reduced, positive denominator).
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }

std::string to_string(const Integer& a);
// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& a);

// Accepts "[-]digits" or "[-]digits/digits". Throws ParseError on failure.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& a) { return a.get_den() == 1; }

}  // namespace ocb
