#pragma once
#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmanin/ratq.hpp"

namespace qm {

// A word is a string of generator ids. Ids are assigned in precedence order, so the
// deglex order is: shorter first, then lexicographic on ids.
using Word = std::u16string;
using Gen = char16_t;

Word make_word(std::initializer_list<int> ids);

inline bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}
struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  size_t size() const { return names_.size(); }
  const std::string& name(size_t id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }
  int find(const std::string& name) const;  // -1 if absent
  Gen id(const std::string& name) const;    // throws if absent
  std::string word_str(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

struct AlphabetMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Sparse noncommutative polynomial; terms sorted in decreasing deglex order.
class NCPoly {
 public:
  using Term = std::pair<Word, RatQ>;

  NCPoly() = default;
  NCPoly(const RatQ& c, const Alphabet* a = nullptr) : alpha_(a) {
    if (!c.is_zero()) t_.emplace_back(Word(), c);
  }
  NCPoly(long c) : NCPoly(RatQ(c)) {}
  static NCPoly monomial(const Word& w, const RatQ& c, const Alphabet* a);
  static NCPoly gen(Gen g, const Alphabet* a) { return monomial(Word(1, g), RatQ(1), a); }
  static NCPoly from_terms(std::vector<Term> terms, const Alphabet* a);  // sorts, merges

  const std::vector<Term>& terms() const { return t_; }
  const Alphabet* alphabet() const { return alpha_; }
  void set_alphabet(const Alphabet* a) { alpha_ = a; }
  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_[0].first.empty()); }
  RatQ scalar_value() const;  // requires is_scalar()
  const Word& lead_word() const { return t_.front().first; }
  const RatQ& lead_coeff() const { return t_.front().second; }
  size_t degree() const;
  size_t size() const { return t_.size(); }
  RatQ coeff(const Word& w) const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const RatQ& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const RatQ& c) { return a *= c; }
  friend NCPoly operator*(const RatQ& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }

  // u * this * v
  NCPoly sandwich(const Word& u, const Word& v, const RatQ& c) const;
  NCPoly map_coeffs(RatQ (*f)(const RatQ&)) const;
  // Rename generators through an id map (into another alphabet).
  NCPoly relabel(const std::vector<Gen>& map, const Alphabet* target) const;

  std::string str() const;

 private:
  const Alphabet* common(const NCPoly& o) const;
  std::vector<Term> t_;
  const Alphabet* alpha_ = nullptr;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

}  // namespace qm
