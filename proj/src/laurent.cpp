#include "qmanin/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace qm {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

LaurentQ LaurentQ::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentQ r;
  for (auto& [e, c] : terms) {
    if (!r.t_.empty() && r.t_.back().first == e)
      r.t_.back().second += c;
    else
      r.t_.emplace_back(e, c);
    if (r.t_.back().second == 0) r.t_.pop_back();
  }
  return r;
}

Rational LaurentQ::coeff(int e) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), e,
                             [](const Term& a, int x) { return a.first < x; });
  if (it != t_.end() && it->first == e) return it->second;
  return 0;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ r = *this;
  for (auto& t : r.t_) t.first += k;
  return r;
}

LaurentQ LaurentQ::q_inverted() const {
  LaurentQ r;
  r.t_.reserve(t_.size());
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) r.t_.emplace_back(-it->first, it->second);
  return r;
}

Rational LaurentQ::eval(const Rational& v) const {
  if (v == 0) throw std::domain_error("LaurentQ::eval at q=0");
  Rational s = 0;
  for (auto& [e, c] : t_) {
    Rational p = 1;
    Rational b = e >= 0 ? v : Rational(1 / v);
    for (int i = 0; i < std::abs(e); ++i) p *= b;
    s += c * p;
  }
  return s;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

static void merge_into(std::vector<LaurentQ::Term>& a, const std::vector<LaurentQ::Term>& b,
                       int sign) {
  std::vector<LaurentQ::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].second + b[j].second)
                            : Rational(a[i].second - b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i, ++j;
    }
  }
  a = std::move(out);
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  merge_into(t_, o.t_, 1);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  if (o.t_.empty()) return *this;
  merge_into(t_, o.t_, -1);
  return *this;
}

LaurentQ& LaurentQ::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.second *= c;
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.t_.size() == 1) {
    LaurentQ r = b.shifted(a.t_[0].first);
    return r *= a.t_[0].second;
  }
  if (b.t_.size() == 1) {
    LaurentQ r = a.shifted(b.t_[0].first);
    return r *= b.t_[0].second;
  }
  int lo = a.low() + b.low(), hi = a.high() + b.high();
  std::vector<Rational> acc(hi - lo + 1);
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) acc[ea + eb - lo] += ca * cb;
  LaurentQ r;
  for (int k = 0; k <= hi - lo; ++k)
    if (acc[k] != 0) r.t_.emplace_back(k + lo, std::move(acc[k]));
  return r;
}

bool operator<(const LaurentQ& a, const LaurentQ& b) {
  size_t n = std::min(a.t_.size(), b.t_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.t_[i].first != b.t_[i].first) return a.t_[i].first < b.t_[i].first;
    if (a.t_[i].second != b.t_[i].second) return a.t_[i].second < b.t_[i].second;
  }
  return a.t_.size() < b.t_.size();
}

std::string LaurentQ::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto [e, c] = *it;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string qp = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    if (qp.empty())
      s += a.get_str();
    else if (a == 1)
      s += qp;
    else
      s += a.get_str() + "*" + qp;
  }
  return s;
}

LaurentQ neg_q_pow(int k) {
  return LaurentQ::monomial(k, (k % 2 == 0) ? 1 : -1);
}

namespace upoly {

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense from_laurent(const LaurentQ& p, int* shift) {
  Dense d;
  if (p.is_zero()) {
    *shift = 0;
    return d;
  }
  *shift = p.low();
  d.assign(p.high() - p.low() + 1, Rational(0));
  for (auto& [e, c] : p.terms()) d[e - p.low()] = c;
  return d;
}

LaurentQ to_laurent(const Dense& a, int shift) {
  std::vector<LaurentQ::Term> t;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) t.emplace_back(int(i) + shift, a[i]);
  return LaurentQ::from_terms(std::move(t));
}

void divmod(const Dense& a, const Dense& b, Dense& quo, Dense& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  trim(rem);
  quo.clear();
  if (rem.size() < b.size()) return;
  quo.assign(rem.size() - b.size() + 1, Rational(0));
  Rational inv = 1 / b.back();
  while (rem.size() >= b.size() && !rem.empty()) {
    size_t k = rem.size() - b.size();
    Rational f = rem.back() * inv;
    quo[k] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= f * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quo);
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational inv = 1 / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

}  // namespace upoly

}  // namespace qm
