#include "qmanin/ratq.hpp"

#include <stdexcept>

namespace qm {

RatQ::RatQ(const LaurentQ& n, const LaurentQ& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("RatQ: division by zero");
  canonicalize();
}

void RatQ::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentQ(1);
    return;
  }
  if (den_.is_monomial()) {
    int e = den_.low();
    Rational c = 1 / den_.lead_coeff();
    num_ = num_.shifted(-e);
    num_ *= c;
    den_ = LaurentQ(1);
    return;
  }
  int sn, sd;
  upoly::Dense n = upoly::from_laurent(num_, &sn);
  upoly::Dense d = upoly::from_laurent(den_, &sd);
  upoly::Dense g = upoly::gcd(n, d);
  if (g.size() > 1) {
    upoly::Dense qq, r;
    upoly::divmod(n, g, qq, r);
    n = std::move(qq);
    upoly::divmod(d, g, qq, r);
    d = std::move(qq);
  }
  Rational lc = 1 / d.back();
  for (auto& c : n) c *= lc;
  for (auto& c : d) c *= lc;
  num_ = upoly::to_laurent(n, sn - sd);
  den_ = upoly::to_laurent(d, 0);
}

Rational RatQ::as_rational() const {
  if (!is_rational()) throw std::logic_error("RatQ is not a rational constant");
  return num_.coeff(0);
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw std::domain_error("RatQ: inverse of zero");
  return RatQ(den_, num_);
}

RatQ RatQ::q_inverted() const {
  if (den_.is_one()) return RatQ(num_.q_inverted());
  return RatQ(num_.q_inverted(), den_.q_inverted());
}

Rational RatQ::subs(const Rational& v) const {
  if (v == 0) throw std::domain_error("substitute_q: value must be nonzero");
  Rational d = den_.eval(v);
  if (d == 0) throw std::domain_error("substitute_q: pole at q=" + v.get_str());
  return num_.eval(v) / d;
}

RatQ& RatQ::operator+=(const RatQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ& RatQ::operator*=(const RatQ& o) {
  if (is_zero() || o.is_zero()) {
    num_ = LaurentQ();
    den_ = LaurentQ(1);
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) {
  if (o.is_zero()) throw std::domain_error("RatQ: division by zero");
  return *this *= o.inverse();
}

bool RatQ::is_compound() const { return !den_.is_one() || num_.terms().size() > 1; }

std::string RatQ::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qm
