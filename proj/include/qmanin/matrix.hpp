#pragma once
#include <stdexcept>
#include <vector>

#include "qmanin/ncpoly.hpp"

namespace qm {

// Zero and unit elements shaped like a given element.
template <class T>
struct Ring {
  static T zero_like(const T&) { return T(); }
  static T one_like(const T&) { return T(1); }
};

template <>
struct Ring<NCPoly> {
  static NCPoly zero_like(const NCPoly& x) { return NCPoly(RatQ(), x.alphabet()); }
  static NCPoly one_like(const NCPoly& x) { return NCPoly(RatQ(1), x.alphabet()); }
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t r, size_t c, const T& fill = T()) : r_(r), c_(c), a_(r * c, fill) {}
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  // 1-based access matches the index conventions used throughout.
  T& operator()(size_t i, size_t j) { return a_.at((i - 1) * c_ + (j - 1)); }
  const T& operator()(size_t i, size_t j) const { return a_.at((i - 1) * c_ + (j - 1)); }
  const std::vector<T>& data() const { return a_; }

  // Rows I, columns J (1-based, any order, repeats allowed).
  Matrix sub(const std::vector<int>& I, const std::vector<int>& J) const {
    Matrix s(I.size(), J.size());
    for (size_t a = 0; a < I.size(); ++a)
      for (size_t b = 0; b < J.size(); ++b) s(a + 1, b + 1) = (*this)(I[a], J[b]);
    return s;
  }
  Matrix transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 1; i <= r_; ++i)
      for (size_t j = 1; j <= c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> m(r_, c_);
    for (size_t i = 1; i <= r_; ++i)
      for (size_t j = 1; j <= c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - b.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.r_, b.c_);
    for (size_t i = 1; i <= a.r_; ++i)
      for (size_t k = 1; k <= b.c_; ++k) {
        T acc = Ring<T>::zero_like(a(i, 1));
        for (size_t j = 1; j <= a.c_; ++j) acc = acc + a(i, j) * b(j, k);
        r(i, k) = acc;
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using NCMatrix = Matrix<NCPoly>;

}  // namespace qm
