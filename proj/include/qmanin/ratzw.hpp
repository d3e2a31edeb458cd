#pragma once
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qmanin/ratq.hpp"

namespace qm {

enum class Spectral { z, w };

// Polynomial in z, w over Q(q); terms ascending in graded-lex order with z > w.
class PolyZW {
 public:
  using Exp = std::array<int, 2>;  // {deg z, deg w}
  using Term = std::pair<Exp, RatQ>;

  PolyZW() = default;
  PolyZW(const RatQ& c) {
    if (!c.is_zero()) t_.push_back({{0, 0}, c});
  }
  static PolyZW monomial(Exp e, const RatQ& c = RatQ(1));
  static PolyZW from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == Exp{0, 0}); }
  bool is_one() const { return is_constant() && !t_.empty() && t_[0].second.is_one(); }
  const Term& lead() const { return t_.back(); }
  int degree(Spectral v) const;
  bool uses(Spectral v) const { return degree(v) > 0; }

  PolyZW operator-() const;
  PolyZW& operator+=(const PolyZW& o);
  PolyZW& operator-=(const PolyZW& o);
  PolyZW& operator*=(const RatQ& c);
  friend PolyZW operator+(PolyZW a, const PolyZW& b) { return a += b; }
  friend PolyZW operator-(PolyZW a, const PolyZW& b) { return a -= b; }
  friend PolyZW operator*(const PolyZW& a, const PolyZW& b);
  friend PolyZW operator*(PolyZW a, const RatQ& c) { return a *= c; }
  friend bool operator==(const PolyZW& a, const PolyZW& b) { return a.t_ == b.t_; }

  PolyZW shifted(Spectral v, int k) const;  // v -> q^{2k} v
  PolyZW swapped() const;                   // z <-> w
  PolyZW q_inverted() const;
  PolyZW mapped_coeffs(const std::function<RatQ(const RatQ&)>& f) const;

  std::string str() const;

 private:
  std::vector<Term> t_;
};

// Exact division (throws if not exact), gcd normalized monic in graded-lex.
PolyZW exact_div(const PolyZW& a, const PolyZW& b);
PolyZW gcd(const PolyZW& a, const PolyZW& b);

// Rational function in z, w over Q(q). Canonical: den monic in its graded-lex
// leading term, gcd(num, den) = 1.
class RatZW {
 public:
  RatZW() : den_(RatQ(1)) {}
  RatZW(long c) : num_(RatQ(c)), den_(RatQ(1)) {}
  RatZW(const RatQ& c) : num_(c), den_(RatQ(1)) {}
  RatZW(const PolyZW& p) : num_(p), den_(RatQ(1)) {}
  RatZW(const PolyZW& n, const PolyZW& d);
  static RatZW z() { return RatZW(PolyZW::monomial({1, 0})); }
  static RatZW w() { return RatZW(PolyZW::monomial({0, 1})); }

  const PolyZW& num() const { return num_; }
  const PolyZW& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_ratq() const { return num_.is_constant() && den_.is_one(); }
  RatQ as_ratq() const;

  RatZW inverse() const;
  RatZW shifted(Spectral v, int k) const;
  RatZW swapped() const;
  RatZW q_inverted() const;
  // q -> value; the result has rational coefficients only.
  RatZW subs_q(const Rational& value) const;
  // v -> value (a RatZW in the other variable or constant); throws on a pole.
  RatZW subs(Spectral v, const RatZW& value) const;

  RatZW operator-() const {
    RatZW r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatZW& operator+=(const RatZW& o);
  RatZW& operator-=(const RatZW& o) { return *this += -o; }
  RatZW& operator*=(const RatZW& o);
  RatZW& operator/=(const RatZW& o);
  friend RatZW operator+(RatZW a, const RatZW& b) { return a += b; }
  friend RatZW operator-(RatZW a, const RatZW& b) { return a -= b; }
  friend RatZW operator*(RatZW a, const RatZW& b) { return a *= b; }
  friend RatZW operator/(RatZW a, const RatZW& b) { return a /= b; }
  friend RatZW operator*(RatZW a, const RatQ& c) {
    if (c.is_zero()) return RatZW();
    a.num_ *= c;
    return a;
  }
  friend bool operator==(const RatZW& a, const RatZW& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void canonicalize();
  void normalize_lead();
  PolyZW num_, den_;
};

}  // namespace qm
