#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace einf {

// Exact rationals everywhere: boundary parameters 0/1 and the Leibniz
// trichotomy have to be decided exactly.
using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

// Always reduced; integers print without a denominator.
std::string to_string(const Rational& q);

inline bool in_unit_interval(const Rational& q) { return q >= 0 && q <= 1; }

double to_double(const Rational& q);

// p/q in canonical form (mpq_class(p, q) is not reduced).
inline Rational fraction(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace einf
