#include "qmanin/ratzw.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qm {

namespace {

bool grlex_less(const PolyZW::Exp& a, const PolyZW::Exp& b) {
  int da = a[0] + a[1], db = b[0] + b[1];
  if (da != db) return da < db;
  return a[0] < b[0];
}

// Dense univariate polynomials in w over Q(q).
using UW = std::vector<RatQ>;

void trim(UW& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UW uw_mul(const UW& a, const UW& b) {
  if (a.empty() || b.empty()) return {};
  UW r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UW uw_sub(UW a, const UW& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void uw_divmod(const UW& a, const UW& b, UW& quo, UW& rem) {
  rem = a;
  trim(rem);
  quo.clear();
  if (rem.size() < b.size()) return;
  quo.assign(rem.size() - b.size() + 1, RatQ());
  RatQ inv = b.back().inverse();
  while (!rem.empty() && rem.size() >= b.size()) {
    size_t k = rem.size() - b.size();
    RatQ f = rem.back() * inv;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= f * b[i];
    quo[k] = f;
    rem.pop_back();
    trim(rem);
  }
  trim(quo);
}

UW uw_monic(UW a) {
  if (a.empty()) return a;
  RatQ inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

UW uw_gcd(UW a, UW b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UW q, r;
    uw_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return uw_monic(std::move(a));
}

// Polynomials in z with coefficients in Q(q)[w].
using BP = std::vector<UW>;

void trim(BP& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

BP to_bp(const PolyZW& p) {
  BP b;
  for (auto& [e, c] : p.terms()) {
    if (int(b.size()) <= e[0]) b.resize(e[0] + 1);
    auto& u = b[e[0]];
    if (int(u.size()) <= e[1]) u.resize(e[1] + 1);
    u[e[1]] = c;
  }
  return b;
}

PolyZW from_bp(const BP& b) {
  std::vector<PolyZW::Term> t;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b[i].size(); ++j)
      if (!b[i][j].is_zero()) t.push_back({{int(i), int(j)}, b[i][j]});
  return PolyZW::from_terms(std::move(t));
}

UW content(const BP& a) {
  UW g;
  for (auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? uw_monic(c) : uw_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

// a / content, scaled so the leading coefficient of the leading z-coefficient is 1.
BP prim(const BP& a) {
  UW c = content(a);
  BP r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    if (c.size() == 1) {
      r[i] = a[i];
    } else {
      UW q, rem;
      uw_divmod(a[i], c, q, rem);
      r[i] = std::move(q);
    }
  }
  trim(r);
  if (!r.empty()) {
    RatQ inv = r.back().back().inverse();
    for (auto& u : r)
      for (auto& x : u) x *= inv;
  }
  return r;
}

BP prem(BP a, const BP& b) {
  const UW& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    size_t k = a.size() - b.size();
    UW la = a.back();
    for (auto& c : a) c = uw_mul(c, lb);
    for (size_t i = 0; i < b.size(); ++i) a[k + i] = uw_sub(a[k + i], uw_mul(la, b[i]));
    trim(a);
  }
  return a;
}

PolyZW monic_grlex(const PolyZW& p) {
  if (p.is_zero()) return p;
  return p * p.lead().second.inverse();
}

}  // namespace

PolyZW PolyZW::monomial(Exp e, const RatQ& c) {
  PolyZW r;
  if (!c.is_zero()) r.t_.push_back({e, c});
  return r;
}

PolyZW PolyZW::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_less(a.first, b.first); });
  PolyZW r;
  for (auto& t : terms) {
    if (!r.t_.empty() && r.t_.back().first == t.first)
      r.t_.back().second += t.second;
    else
      r.t_.push_back(std::move(t));
    if (r.t_.back().second.is_zero()) r.t_.pop_back();
  }
  return r;
}

int PolyZW::degree(Spectral v) const {
  int k = v == Spectral::z ? 0 : 1, d = 0;
  for (auto& t : t_) d = std::max(d, t.first[k]);
  return d;
}

PolyZW PolyZW::operator-() const {
  PolyZW r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

static void merge(std::vector<PolyZW::Term>& a, const std::vector<PolyZW::Term>& b, bool sub) {
  std::vector<PolyZW::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(a[i].first, b[j].first))) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || grlex_less(b[j].first, a[i].first)) {
      out.push_back({b[j].first, sub ? -b[j].second : b[j].second});
      ++j;
    } else {
      RatQ c = sub ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.push_back({a[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  a = std::move(out);
}

PolyZW& PolyZW::operator+=(const PolyZW& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  merge(t_, o.t_, false);
  return *this;
}

PolyZW& PolyZW::operator-=(const PolyZW& o) {
  if (o.t_.empty()) return *this;
  merge(t_, o.t_, true);
  return *this;
}

PolyZW& PolyZW::operator*=(const RatQ& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : t_) t.second *= c;
  return *this;
}

PolyZW operator*(const PolyZW& a, const PolyZW& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.t_[0].second;
  if (b.is_constant()) return a * b.t_[0].second;
  std::map<std::pair<int, int>, RatQ> acc;  // keyed (total, z)
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) {
      int z = ea[0] + eb[0], w = ea[1] + eb[1];
      acc[{z + w, z}] += ca * cb;
    }
  PolyZW r;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) r.t_.push_back({{k.second, k.first - k.second}, c});
  return r;
}

PolyZW PolyZW::shifted(Spectral v, int k) const {
  if (k == 0) return *this;
  int idx = v == Spectral::z ? 0 : 1;
  PolyZW r = *this;
  for (auto& t : r.t_)
    if (t.first[idx] != 0) t.second *= RatQ::q(2 * k * t.first[idx]);
  return r;
}

PolyZW PolyZW::swapped() const {
  std::vector<Term> t;
  for (auto& [e, c] : t_) t.push_back({{e[1], e[0]}, c});
  return from_terms(std::move(t));
}

PolyZW PolyZW::q_inverted() const {
  PolyZW r = *this;
  for (auto& t : r.t_) t.second = t.second.q_inverted();
  return r;
}

PolyZW PolyZW::mapped_coeffs(const std::function<RatQ(const RatQ&)>& f) const {
  std::vector<Term> t;
  for (auto& [e, c] : t_) t.push_back({e, f(c)});
  return from_terms(std::move(t));
}

std::string PolyZW::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto& [e, c] = *it;
    std::string mon;
    auto var = [&](const char* name, int k) {
      if (k == 0) return;
      if (!mon.empty()) mon += "*";
      mon += name;
      if (k > 1) mon += "^" + std::to_string(k);
    };
    var("z", e[0]);
    var("w", e[1]);
    std::string cs = c.str();
    bool neg = !c.is_compound() && !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (c.is_compound()) cs = "(" + cs + ")";
    std::string term;
    if (mon.empty())
      term = cs;
    else if (cs == "1")
      term = mon;
    else
      term = cs + "*" + mon;
    if (s.empty())
      s = (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  return s;
}

PolyZW exact_div(const PolyZW& a, const PolyZW& b) {
  if (b.is_zero()) throw std::domain_error("PolyZW: division by zero");
  if (b.is_constant()) return a * b.terms()[0].second.inverse();
  PolyZW rem = a, quo;
  const auto& [eb, cb] = b.lead();
  RatQ inv = cb.inverse();
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.lead();
    if (er[0] < eb[0] || er[1] < eb[1]) throw std::domain_error("PolyZW: inexact division");
    PolyZW t = PolyZW::monomial({er[0] - eb[0], er[1] - eb[1]}, cr * inv);
    quo += t;
    rem -= t * b;
  }
  return quo;
}

PolyZW gcd(const PolyZW& a, const PolyZW& b) {
  if (a.is_zero()) return monic_grlex(b);
  if (b.is_zero()) return monic_grlex(a);
  if (a.is_constant() || b.is_constant()) return PolyZW(RatQ(1));
  if (a == b) return monic_grlex(a);
  // Monomial content handled directly.
  auto min_exp = [](const PolyZW& p) {
    PolyZW::Exp m = p.terms()[0].first;
    for (auto& t : p.terms()) m = {std::min(m[0], t.first[0]), std::min(m[1], t.first[1])};
    return m;
  };
  if (a.terms().size() == 1 || b.terms().size() == 1) {
    auto ma = min_exp(a), mb = min_exp(b);
    return PolyZW::monomial({std::min(ma[0], mb[0]), std::min(ma[1], mb[1])});
  }
  BP A = to_bp(a), B = to_bp(b);
  UW c = uw_gcd(content(A), content(B));
  A = prim(A);
  B = prim(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    BP r = prem(A, B);
    A = std::move(B);
    B = r.empty() ? r : prim(r);
  }
  BP g = A.size() == 1 ? BP{UW{RatQ(1)}} : A;
  for (auto& u : g) u = uw_mul(u, c);
  return monic_grlex(from_bp(g));
}

RatZW::RatZW(const PolyZW& n, const PolyZW& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("RatZW: division by zero");
  canonicalize();
}

void RatZW::normalize_lead() {
  if (num_.is_zero()) {
    den_ = PolyZW(RatQ(1));
    return;
  }
  const RatQ& c = den_.lead().second;
  if (c.is_one()) return;
  RatQ inv = c.inverse();
  num_ *= inv;
  den_ *= inv;
}

void RatZW::canonicalize() {
  if (num_.is_zero()) {
    den_ = PolyZW(RatQ(1));
    return;
  }
  if (den_.is_constant()) {
    num_ *= den_.terms()[0].second.inverse();
    den_ = PolyZW(RatQ(1));
    return;
  }
  PolyZW g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  normalize_lead();
  if (den_.is_constant()) den_ = PolyZW(RatQ(1));
}

RatQ RatZW::as_ratq() const {
  if (!is_ratq()) throw std::logic_error("RatZW is not spectral-constant");
  return num_.is_zero() ? RatQ() : num_.terms()[0].second;
}

RatZW RatZW::inverse() const {
  if (is_zero()) throw std::domain_error("RatZW: inverse of zero");
  RatZW r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize_lead();
  return r;
}

RatZW RatZW::shifted(Spectral v, int k) const {
  if (k == 0) return *this;
  RatZW r;
  r.num_ = num_.shifted(v, k);
  r.den_ = den_.shifted(v, k);
  r.normalize_lead();
  return r;
}

RatZW RatZW::swapped() const {
  RatZW r;
  r.num_ = num_.swapped();
  r.den_ = den_.swapped();
  r.normalize_lead();
  return r;
}

RatZW RatZW::q_inverted() const {
  RatZW r;
  r.num_ = num_.q_inverted();
  r.den_ = den_.q_inverted();
  r.normalize_lead();
  return r;
}

RatZW RatZW::subs_q(const Rational& value) const {
  auto f = [&](const RatQ& c) { return RatQ(c.subs(value)); };
  PolyZW d = den_.mapped_coeffs(f);
  if (d.is_zero()) throw std::domain_error("substitute_q: denominator vanishes");
  return RatZW(num_.mapped_coeffs(f), d);
}

RatZW RatZW::subs(Spectral v, const RatZW& value) const {
  auto eval = [&](const PolyZW& p) {
    RatZW acc;
    int idx = v == Spectral::z ? 0 : 1;
    for (auto& [e, c] : p.terms()) {
      PolyZW::Exp rest = e;
      rest[idx] = 0;
      RatZW t(PolyZW::monomial(rest, c));
      for (int i = 0; i < e[idx]; ++i) t *= value;
      acc += t;
    }
    return acc;
  };
  RatZW d = eval(den_);
  if (d.is_zero()) throw std::domain_error("RatZW::subs: pole");
  return eval(num_) / d;
}

RatZW& RatZW::operator+=(const RatZW& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  PolyZW g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = PolyZW(RatQ(1));
    return *this;
  }
  PolyZW b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
  num_ = num_ * d1 + o.num_ * b1;
  if (num_.is_zero()) {
    den_ = PolyZW(RatQ(1));
    return *this;
  }
  PolyZW g2 = gcd(num_, g);
  if (!g2.is_one()) {
    num_ = exact_div(num_, g2);
    g = exact_div(g, g2);
  }
  den_ = b1 * d1 * g;
  normalize_lead();
  if (den_.is_constant()) den_ = PolyZW(RatQ(1));
  return *this;
}

RatZW& RatZW::operator*=(const RatZW& o) {
  if (is_zero() || o.is_zero()) return *this = RatZW();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  PolyZW g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  PolyZW a = g1.is_one() ? num_ : exact_div(num_, g1);
  PolyZW d = g1.is_one() ? o.den_ : exact_div(o.den_, g1);
  PolyZW c = g2.is_one() ? o.num_ : exact_div(o.num_, g2);
  PolyZW b = g2.is_one() ? den_ : exact_div(den_, g2);
  num_ = a * c;
  den_ = b * d;
  normalize_lead();
  if (den_.is_constant()) {
    num_ *= den_.terms()[0].second.inverse();
    den_ = PolyZW(RatQ(1));
  }
  return *this;
}

RatZW& RatZW::operator/=(const RatZW& o) { return *this *= o.inverse(); }

std::string RatZW::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qm
