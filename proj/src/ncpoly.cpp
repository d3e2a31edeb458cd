#include "qmanin/ncpoly.hpp"

#include <algorithm>

namespace qm {

Word make_word(std::initializer_list<int> ids) {
  Word w;
  for (int i : ids) w.push_back(Gen(i));
  return w;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], int(i)).second)
      throw std::invalid_argument("duplicate generator name: " + names_[i]);
  }
}

int Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

Gen Alphabet::id(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw std::invalid_argument("unknown generator: " + name);
  return Gen(i);
}

std::string Alphabet::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += names_.at(w[i]);
  }
  return s;
}

static bool term_greater(const NCPoly::Term& a, const NCPoly::Term& b) {
  return deglex_less(b.first, a.first);
}

NCPoly NCPoly::monomial(const Word& w, const RatQ& c, const Alphabet* a) {
  NCPoly p;
  p.alpha_ = a;
  if (!c.is_zero()) p.t_.emplace_back(w, c);
  return p;
}

NCPoly NCPoly::from_terms(std::vector<Term> terms, const Alphabet* a) {
  std::sort(terms.begin(), terms.end(), term_greater);
  NCPoly p;
  p.alpha_ = a;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().first == t.first)
      p.t_.back().second += t.second;
    else
      p.t_.push_back(std::move(t));
    if (p.t_.back().second.is_zero()) p.t_.pop_back();
  }
  return p;
}

RatQ NCPoly::scalar_value() const {
  if (!is_scalar()) throw std::logic_error("NCPoly is not a scalar");
  return t_.empty() ? RatQ() : t_[0].second;
}

size_t NCPoly::degree() const {
  size_t d = 0;
  for (auto& t : t_) d = std::max(d, t.first.size());
  return d;
}

RatQ NCPoly::coeff(const Word& w) const {
  for (auto& t : t_)
    if (t.first == w) return t.second;
  return RatQ();
}

const Alphabet* NCPoly::common(const NCPoly& o) const {
  if (!alpha_) return o.alpha_;
  if (!o.alpha_ || o.alpha_ == alpha_) return alpha_;
  throw AlphabetMismatch("NCPoly: alphabet mismatch");
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

static void merge_terms(std::vector<NCPoly::Term>& a, const std::vector<NCPoly::Term>& b,
                        bool sub) {
  std::vector<NCPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && deglex_less(b[j].first, a[i].first))) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || deglex_less(a[i].first, b[j].first)) {
      out.emplace_back(b[j].first, sub ? -b[j].second : b[j].second);
      ++j;
    } else {
      RatQ c = sub ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(std::move(a[i].first), std::move(c));
      ++i, ++j;
    }
  }
  a = std::move(out);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  alpha_ = common(o);
  if (o.t_.empty()) return *this;
  if (t_.empty()) {
    t_ = o.t_;
    return *this;
  }
  merge_terms(t_, o.t_, false);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  alpha_ = common(o);
  if (o.t_.empty()) return *this;
  merge_terms(t_, o.t_, true);
  return *this;
}

NCPoly& NCPoly::operator*=(const RatQ& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : t_) t.second *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  const Alphabet* al = a.common(b);
  if (a.t_.empty() || b.t_.empty()) {
    NCPoly z;
    z.alpha_ = al;
    return z;
  }
  std::vector<NCPoly::Term> terms;
  terms.reserve(a.t_.size() * b.t_.size());
  for (auto& [wa, ca] : a.t_)
    for (auto& [wb, cb] : b.t_) terms.emplace_back(wa + wb, ca * cb);
  return NCPoly::from_terms(std::move(terms), al);
}

NCPoly NCPoly::sandwich(const Word& u, const Word& v, const RatQ& c) const {
  NCPoly r;
  r.alpha_ = alpha_;
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  // deglex is multiplicative, so the order survives.
  for (auto& [w, k] : t_) r.t_.emplace_back(u + w + v, k * c);
  return r;
}

NCPoly NCPoly::map_coeffs(RatQ (*f)(const RatQ&)) const {
  std::vector<Term> t;
  for (auto& [w, c] : t_) t.emplace_back(w, f(c));
  return from_terms(std::move(t), alpha_);
}

NCPoly NCPoly::relabel(const std::vector<Gen>& map, const Alphabet* target) const {
  std::vector<Term> t;
  t.reserve(t_.size());
  for (auto& [w, c] : t_) {
    Word u(w.size(), 0);
    for (size_t i = 0; i < w.size(); ++i) u[i] = map.at(w[i]);
    t.emplace_back(std::move(u), c);
  }
  return from_terms(std::move(t), target);
}

std::string NCPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string cs = c.str();
    bool neg = false;
    if (!c.is_compound() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    } else if (c.is_compound()) {
      cs = "(" + cs + ")";
    }
    std::string ws = w.empty() ? "" : (alpha_ ? alpha_->word_str(w) : "?");
    std::string term;
    if (ws.empty())
      term = cs;
    else if (cs == "1")
      term = ws;
    else
      term = cs + "*" + ws;
    if (s.empty())
      s = (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  return s;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

}  // namespace qm
