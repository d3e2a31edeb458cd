#pragma once
#include <string>
#include <utility>
#include <vector>

#include "qmanin/rational.hpp"

namespace qm {

// Laurent polynomial in q over Q, terms sorted by ascending exponent.
class LaurentQ {
 public:
  using Term = std::pair<int, Rational>;

  LaurentQ() = default;
  LaurentQ(long c) : LaurentQ(Rational(c)) {}
  LaurentQ(const Rational& c) {
    if (c != 0) t_.emplace_back(0, c);
  }
  static LaurentQ monomial(int e, const Rational& c = 1) {
    LaurentQ r;
    if (c != 0) r.t_.emplace_back(e, c);
    return r;
  }
  static LaurentQ from_terms(std::vector<Term> terms);  // sorts and merges

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
  bool is_monomial() const { return t_.size() == 1; }
  int low() const { return t_.front().first; }
  int high() const { return t_.back().first; }
  Rational coeff(int e) const;
  const Rational& lead_coeff() const { return t_.back().second; }

  LaurentQ shifted(int k) const;  // times q^k
  LaurentQ q_inverted() const;    // q -> q^{-1}
  Rational eval(const Rational& v) const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const Rational& c);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(LaurentQ a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.t_ == b.t_; }
  friend bool operator<(const LaurentQ& a, const LaurentQ& b);  // arbitrary total order

  std::string str() const;

 private:
  std::vector<Term> t_;
};

// (-q)^k
LaurentQ neg_q_pow(int k);

namespace upoly {
// Dense univariate polynomials over Q, index = degree, no trailing zeros.
using Dense = std::vector<Rational>;
void trim(Dense& a);
Dense from_laurent(const LaurentQ& p, int* shift);  // p = q^shift * result
LaurentQ to_laurent(const Dense& a, int shift);
void divmod(const Dense& a, const Dense& b, Dense& quo, Dense& rem);
Dense gcd(Dense a, Dense b);  // monic
}  // namespace upoly

}  // namespace qm
