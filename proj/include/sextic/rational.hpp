#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sextic {

// Arbitrary precision rational; mpq_class keeps values canonical after every
// arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace sextic
