#pragma once
#include <map>
#include <string>
#include <vector>

#include "qmanin/ratzw.hpp"
#include "qmanin/tensorrep.hpp"

namespace qm {

using VOp = Tensor<RatZW>;  // operator on the quantum space with entries in Q(q)(z, w)

VOp shift_op(const VOp& f, int k);  // z -> q^{2k} z
VOp swap_op(const VOp& f);          // z <-> w

// sum_k f_k sigma^k with sigma: z -> q^2 z.
class QDiffOp {
 public:
  QDiffOp() = default;
  QDiffOp(int n, int m) : n_(n), m_(m) {}
  QDiffOp(const VOp& f, int k) : n_(f.factor_dim()), m_(f.factors()) {
    if (!f.is_zero()) c_.emplace(k, f);
  }
  static QDiffOp identity(int n, int m) { return QDiffOp(VOp::identity(n, m, RatZW(1)), 0); }

  const std::map<int, VOp>& terms() const { return c_; }
  int space_dim() const { return n_; }
  int space_factors() const { return m_; }
  bool is_zero() const { return c_.empty(); }

  QDiffOp operator-() const;
  friend QDiffOp operator+(const QDiffOp& a, const QDiffOp& b);
  friend QDiffOp operator-(const QDiffOp& a, const QDiffOp& b) { return a + (-b); }
  friend QDiffOp operator*(const QDiffOp& a, const QDiffOp& b);
  friend QDiffOp operator*(const QDiffOp& a, const RatQ& c);
  friend bool operator==(const QDiffOp& a, const QDiffOp& b) { return (a - b).is_zero(); }

 private:
  int n_ = 0, m_ = 0;
  std::map<int, VOp> c_;
};

template <>
struct Ring<QDiffOp> {
  static QDiffOp zero_like(const QDiffOp& x) { return QDiffOp(x.space_dim(), x.space_factors()); }
  static QDiffOp one_like(const QDiffOp& x) {
    return QDiffOp::identity(x.space_dim(), x.space_factors());
  }
};

struct LaxError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// L(z) = R^{(01)}(z/a_1) ... R^{(0N)}(z/a_N) on aux (x) V, V = (C^n)^{(x)N}.
// With scaled = true each factor is (z - a_j) R(z/a_j), which is polynomial in z.
class LaxMatrix {
 public:
  LaxMatrix(int n, std::vector<RatQ> inhomogeneities, bool scaled = true);
  int n() const { return n_; }
  int sites() const { return int(a_.size()); }
  const VOp& full() const { return L_; }  // 1 + N factors, variable z
  VOp at(int shift) const { return shift_op(L_, shift); }
  VOp entry(int i, int j, int shift = 0) const;  // operator on V
  Matrix<VOp> matrix(int shift = 0) const;
  VOp identity_v() const { return VOp::identity(n_, sites(), RatZW(1)); }

 private:
  int n_;
  std::vector<RatQ> a_;
  VOp L_;
};

// R(z/w) L1(z) L2(w) - L2(w) L1(z) R(z/w) on aux (x) aux (x) V.
VOp rll_residual(const LaxMatrix& L);
// M = L(z) sigma and the transposed variant L(z)^T sigma^{-1}.
Matrix<QDiffOp> manin_from_lax(const LaxMatrix& L, bool transposed = false);
VOp qdet_lax(const LaxMatrix& L);
// A_n L1(z) L2(q^2 z) ... Ln(q^{2(n-1)} z) - A_n qdet L(z)
VOp fused_qdet_residual(const LaxMatrix& L);
VOp t_k(const LaxMatrix& L, int k);
std::vector<Matrix<VOp>> l_powers(const LaxMatrix& L, int m);  // L^[0..m](z)
VOp i_k(const LaxMatrix& L, int k);
Matrix<VOp> shift_matrix(const Matrix<VOp>& M, int k);
// sum_m (-1)^m t_m(z) L^[n-m](q^{2m} z)
Matrix<VOp> lax_cayley_hamilton(const LaxMatrix& L);
// m t_m(z) - sum_k (-1)^{m+k+1} t_k(z) I_{m-k}(q^{2k} z)
VOp lax_newton(const LaxMatrix& L, int m);
// X(z) Y(w) - Y(w) X(z)
VOp commutator_zw(const VOp& X, const VOp& Y);

}  // namespace qm
