#pragma once

#include <gmpxx.h>

#include <string>

namespace pairrank {

// Exact arbitrary-precision rationals. GMP keeps mpq_class canonical
// (reduced, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline Rational rat_pow(const Rational& base, unsigned e) {
  Rational r(1);
  Rational b = base;
  unsigned k = e;
  while (k > 0) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace pairrank
