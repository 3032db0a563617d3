#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sperner {

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, coprime numerator and denominator).
using Rational = mpq_class;

/// Parses "p" or "p/q" with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// p/q in canonical form; the two-argument mpq_class constructor skips this.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return abs(value); }

}  // namespace sperner
