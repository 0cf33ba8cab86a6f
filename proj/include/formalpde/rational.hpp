#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace formalpde {

using Integer = mpz_class;
using Rational = mpq_class;

// "3", "-1/2"
std::string to_string(const Rational& x);

// Accepts "p" or "p/q" with an optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// p/q in lowest terms; mpq_class(p, q) alone does not canonicalize.
inline Rational fraction(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

}  // namespace formalpde
