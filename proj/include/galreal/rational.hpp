#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace galreal {

/// Arbitrary precision rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a" or "a/b" with optional leading sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational & r);

inline bool is_integer(const Rational & r) { return r.get_den() == 1; }

/// Integer value of r; r must be integral and fit in a long.
long to_long(const Rational & r);

}  // namespace galreal
