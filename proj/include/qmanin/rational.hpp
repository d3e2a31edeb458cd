#pragma once
#include <gmpxx.h>

#include <string>

namespace qm {

// Exact rationals; mpq_class keeps gcd(num,den)=1 and den>0 after canonicalize().
using Rational = mpq_class;

inline Rational make_rational(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "7", "-3/4".
Rational parse_rational(const std::string& s);

}  // namespace qm
