#pragma once

// Exact arithmetic used everywhere in the engine. All quantities in this
// library are rational numbers; no floating point appears anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fjrw {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Floor of an exact rational as an integer.
inline Int floor_int(const Rational& r) {
  Int n = numerator(r), d = denominator(r);  // d > 0 by cpp_rational invariant
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(floor_int(r)); }

/// Least nonnegative residue of a modulo m (m > 0).
inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

/// "p/q" for proper fractions, "p" for integers. Used for all serialized
/// rationals so output stays exact and byte-stable.
inline std::string rat_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace fjrw
