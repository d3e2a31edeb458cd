#include "qmanin/expr.hpp"

#include <cctype>

namespace qm {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const Alphabet* a) : s_(s), a_(a) {}

  NCPoly parse() {
    skip();
    if (p_ == s_.size()) throw ExprError("empty expression", p_);
    NCPoly r = sum();
    skip();
    if (p_ != s_.size()) throw ExprError(std::string("unexpected '") + s_[p_] + "'", p_);
    return r;
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  NCPoly sum() {
    NCPoly acc = product();
    for (;;) {
      if (eat('+'))
        acc += product();
      else if (eat('-'))
        acc -= product();
      else
        return acc;
    }
  }

  NCPoly product() {
    if (eat('-')) return -product();
    NCPoly acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        skip();
        size_t at = p_;
        NCPoly d = power();
        if (!d.is_scalar()) throw ExprError("division by a non-scalar", at);
        if (d.is_zero()) throw ExprError("division by zero", at);
        acc *= d.scalar_value().inverse();
      } else {
        return acc;
      }
    }
  }

  NCPoly power() {
    skip();
    size_t at = p_;
    bool single_gen = false;
    NCPoly base = atom(&single_gen);
    if (!eat('^')) return base;
    skip();
    size_t epos = p_;
    bool neg = eat('-');
    skip();
    if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_])))
      throw ExprError("integer exponent expected", epos);
    long e = 0;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      e = e * 10 + (s_[p_++] - '0');
      if (e > 100000) throw ExprError("exponent too large", epos);
    }
    if (neg) e = -e;
    if (base.is_scalar()) {
      RatQ b = base.scalar_value();
      if (e < 0) {
        if (b.is_zero()) throw ExprError("zero to a negative power", at);
        b = b.inverse();
        e = -e;
      }
      RatQ r(1);
      for (long k = 0; k < e; ++k) r *= b;
      return NCPoly(r, a_);
    }
    if (!single_gen) throw ExprError("exponent applies only to scalars and single generators", at);
    if (e < 0) throw ExprError("negative power of a generator", epos);
    NCPoly r(RatQ(1), a_);
    for (long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  NCPoly atom(bool* single_gen) {
    skip();
    if (p_ >= s_.size()) throw ExprError("unexpected end of expression", p_);
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      NCPoly r = sum();
      if (!eat(')')) throw ExprError("missing ')'", p_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      return NCPoly(RatQ(Rational(s_.substr(st, p_ - st))), a_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = p_;
      while (p_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_'))
        ++p_;
      std::string id = s_.substr(st, p_ - st);
      int g = a_ ? a_->find(id) : -1;
      if (g >= 0) {
        *single_gen = true;
        return NCPoly::gen(Gen(g), a_);
      }
      if (id == "q") return NCPoly(RatQ::q(1), a_);
      throw ExprError("unknown generator '" + id + "'", st);
    }
    throw ExprError(std::string("unexpected '") + c + "'", p_);
  }

  const std::string& s_;
  const Alphabet* a_;
  size_t p_ = 0;
};

}  // namespace

NCPoly parse_expr(const std::string& text, const Alphabet* alphabet) {
  NCPoly r = Parser(text, alphabet).parse();
  r.set_alphabet(alphabet);
  return r;
}

RatQ parse_scalar(const std::string& text) {
  NCPoly r = Parser(text, nullptr).parse();
  return r.scalar_value();
}

}  // namespace qm
