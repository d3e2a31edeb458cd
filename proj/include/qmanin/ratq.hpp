#pragma once
#include <string>

#include "qmanin/laurent.hpp"

namespace qm {

// Element of Q(q). Canonical: den has lowest exponent 0 and leading coefficient 1,
// gcd(num, den) = 1 as polynomials.
class RatQ {
 public:
  RatQ() : den_(1) {}
  RatQ(long c) : num_(c), den_(1) {}
  RatQ(const Rational& c) : num_(c), den_(1) {}
  RatQ(const LaurentQ& p) : num_(p), den_(1) {}
  RatQ(const LaurentQ& n, const LaurentQ& d);
  static RatQ q(int e = 1) { return RatQ(LaurentQ::monomial(e)); }

  const LaurentQ& num() const { return num_; }
  const LaurentQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  Rational as_rational() const;  // requires is_rational()

  RatQ inverse() const;
  RatQ q_inverted() const;
  Rational subs(const Rational& v) const;  // throws on pole

  RatQ operator-() const {
    RatQ r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatQ& operator+=(const RatQ& o);
  RatQ& operator-=(const RatQ& o);
  RatQ& operator*=(const RatQ& o);
  RatQ& operator/=(const RatQ& o);
  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
  friend bool operator==(const RatQ& a, const RatQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const RatQ& a, const RatQ& b) {
    if (a.den_ == b.den_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  std::string str() const;
  // True when str() needs parentheses as a product factor.
  bool is_compound() const;

 private:
  void canonicalize();
  LaurentQ num_, den_;
};

}  // namespace qm
