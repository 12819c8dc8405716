#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mdl {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced, denominator > 0) as long as construction goes through the
// helpers below.
using Rational = mpq_class;

/// Build a reduced rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);

/// Parse "p/q" or "p". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rational parse_rational(const std::string& text);

/// Render as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Integer power with negative exponents allowed (base must be nonzero
/// for e < 0).
Rational rational_pow(const Rational& base, long e);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline bool in_open_unit_interval(const Rational& r) {
  return r > 0 && r < 1;
}

}  // namespace mdl
