#pragma once
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qmanin/laurent.hpp"
#include "qmanin/matrix.hpp"
#include "qmanin/ratq.hpp"

namespace qm {

using MultiIndex = std::vector<int>;  // 1-based entries

inline int sgn(int k) { return (k > 0) - (k < 0); }

int inversions(const MultiIndex& p);
bool has_repeats(const MultiIndex& p);
// All permutations of (1..n) in lexicographic order.
std::vector<MultiIndex> permutations(int n);
// Increasing k-subsets of (1..n), lexicographic.
std::vector<MultiIndex> increasing_subsets(int n, int k);
// All k-tuples over 1..n.
std::vector<MultiIndex> all_tuples(int n, int k);
MultiIndex complement(const MultiIndex& I, int n);  // \I, increasing
MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

// q^e for the deformation parameter p = q^qsign.
inline RatQ pq(int qsign, int e) { return RatQ::q(qsign * e); }
// (-p)^e with p = q^qsign.
inline RatQ neg_pq(int qsign, int e) { return RatQ(neg_q_pow(qsign * e)); }

// 0 on repeated indices, (-p)^{-inv} otherwise (p = q for qsign=1, q^{-1} for -1).
RatQ eps_q(const MultiIndex& idx, int qsign = 1);
// {eps_{I + \I}, eps_{\I + I}}
std::pair<RatQ, RatQ> eps_split(const MultiIndex& I, int n);

template <class T>
T scale(const T& x, const RatQ& c) {
  return x * c;
}

template <class T>
T det_q(const Matrix<T>& M, int qsign = 1, const std::optional<T>& one = std::nullopt) {
  if (!M.square()) throw std::invalid_argument("det_q: non-square matrix");
  size_t n = M.rows();
  if (n == 0) {
    if (!one) throw std::invalid_argument("det_q: empty matrix needs a unit");
    return *one;
  }
  T acc = Ring<T>::zero_like(M(1, 1));
  for (auto& tau : permutations(int(n))) {
    T prod = M(tau[0], 1);
    for (size_t c = 2; c <= n; ++c) prod = prod * M(tau[c - 1], c);
    acc = acc + scale(prod, neg_pq(qsign, -inversions(tau)));
  }
  return acc;
}

template <class T>
T minor(const Matrix<T>& M, const MultiIndex& I, const MultiIndex& J, int qsign = 1,
        const std::optional<T>& one = std::nullopt) {
  if (I.size() != J.size()) throw std::invalid_argument("minor: size mismatch");
  for (int i : I)
    if (i < 1 || size_t(i) > M.rows()) throw std::out_of_range("minor: row index");
  for (int j : J)
    if (j < 1 || size_t(j) > M.cols()) throw std::out_of_range("minor: column index");
  if (I.empty()) {
    if (one) return *one;
    return Ring<T>::one_like(M(1, 1));
  }
  return det_q(M.sub(I, J), qsign);
}

template <class T>
T unit_like(const Matrix<T>& M) {
  return Ring<T>::one_like(M(1, 1));
}

enum class ExpandForm { left, right };

// Left form: sum_r (-q)^{s-r} M_rs det(M\r\s); right form: sum_r (-q)^{r-s} det(M\r\s) M_rs.
template <class T>
T column_expand(const Matrix<T>& M, int s, ExpandForm form) {
  int n = int(M.rows());
  if (!M.square()) throw std::invalid_argument("column_expand: non-square");
  if (s < 1 || s > n) throw std::out_of_range("column_expand: column");
  T acc = Ring<T>::zero_like(M(1, 1));
  MultiIndex cols = complement({s}, n);
  for (int r = 1; r <= n; ++r) {
    T d = minor(M, complement({r}, n), cols, 1, std::optional<T>(unit_like(M)));
    if (form == ExpandForm::left)
      acc = acc + scale(M(r, s) * d, neg_pq(1, s - r));
    else
      acc = acc + scale(d * M(r, s), neg_pq(1, r - s));
  }
  return acc;
}

// sum_K (-q)^{-sum(k_l - l)} det M_{K,I1} det M_{\K,I2}
template <class T>
T laplace2(const Matrix<T>& M, const MultiIndex& I1, const MultiIndex& I2) {
  int n = int(M.rows());
  if (int(I1.size() + I2.size()) != n) throw std::invalid_argument("laplace: block sizes");
  int m = int(I1.size());
  T acc = Ring<T>::zero_like(M(1, 1));
  std::optional<T> one(unit_like(M));
  for (auto& K : increasing_subsets(n, m)) {
    int e = 0;
    for (int l = 0; l < m; ++l) e += K[l] - (l + 1);
    acc = acc + scale(minor(M, K, I1, 1, one) * minor(M, complement(K, n), I2, 1, one),
                      neg_pq(1, -e));
  }
  return acc;
}

// sum over increasing K_1..K_r partitioning 1..n of eps_{K_1+..+K_r} prod_j det M_{K_j I_j}
template <class T>
T laplace(const Matrix<T>& M, const std::vector<MultiIndex>& blocks) {
  int n = int(M.rows());
  size_t total = 0;
  for (auto& b : blocks) total += b.size();
  if (int(total) != n) throw std::invalid_argument("laplace: block sizes");
  T acc = Ring<T>::zero_like(M(1, 1));
  std::optional<T> one(unit_like(M));
  // enumerate ordered set partitions by recursion
  std::vector<MultiIndex> K(blocks.size());
  std::function<void(size_t, MultiIndex)> rec = [&](size_t b, MultiIndex rest) {
    if (b == blocks.size()) {
      MultiIndex all;
      for (auto& k : K) all = concat(all, k);
      RatQ e = eps_q(all);
      T prod = one.value();
      for (size_t j = 0; j < blocks.size(); ++j) prod = prod * minor(M, K[j], blocks[j], 1, one);
      acc = acc + scale(prod, e);
      return;
    }
    for (auto& pick : increasing_subsets(int(rest.size()), int(blocks[b].size()))) {
      MultiIndex chosen, left;
      size_t p = 0;
      for (size_t i = 0; i < rest.size(); ++i) {
        if (p < pick.size() && pick[p] == int(i) + 1) {
          chosen.push_back(rest[i]);
          ++p;
        } else {
          left.push_back(rest[i]);
        }
      }
      K[b] = chosen;
      rec(b + 1, left);
    }
  };
  MultiIndex all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  rec(0, all);
  return acc;
}

// M^adj_{sr} = (-q)^{r-s} det(M\r\s)
template <class T>
Matrix<T> adjoint(const Matrix<T>& M) {
  if (!M.square()) throw std::invalid_argument("adjoint: non-square");
  int n = int(M.rows());
  Matrix<T> A(n, n);
  std::optional<T> one(unit_like(M));
  for (int s = 1; s <= n; ++s)
    for (int r = 1; r <= n; ++r)
      A(s, r) = scale(minor(M, complement({r}, n), complement({s}, n), 1, one), neg_pq(1, r - s));
  return A;
}

// Coefficients e_0..e_n (sums of principal minors).
template <class T>
std::vector<T> char_q(const Matrix<T>& M, int qsign = 1) {
  if (!M.square()) throw std::invalid_argument("char_q: non-square");
  int n = int(M.rows());
  std::vector<T> e;
  e.push_back(unit_like(M));
  for (int m = 1; m <= n; ++m) {
    T acc = Ring<T>::zero_like(M(1, 1));
    for (auto& I : increasing_subsets(n, m)) acc = acc + det_q(M.sub(I, I), qsign);
    e.push_back(acc);
  }
  return e;
}

template <class T>
T trace(const Matrix<T>& M) {
  T acc = Ring<T>::zero_like(M(1, 1));
  for (size_t i = 1; i <= std::min(M.rows(), M.cols()); ++i) acc = acc + M(i, i);
  return acc;
}

template <class T>
Matrix<T> identity_like(const Matrix<T>& M) {
  size_t n = M.rows();
  Matrix<T> I(n, n, Ring<T>::zero_like(M(1, 1)));
  for (size_t i = 1; i <= n; ++i) I(i, i) = unit_like(M);
  return I;
}

// (A *_q B)_ik = sum_j p^{sgn(j-i)} A_ij B_jk
template <class T>
Matrix<T> star_q(const Matrix<T>& A, const Matrix<T>& B, int qsign = 1) {
  if (A.cols() != B.rows()) throw std::invalid_argument("star_q: shape mismatch");
  Matrix<T> R(A.rows(), B.cols());
  for (size_t i = 1; i <= A.rows(); ++i)
    for (size_t k = 1; k <= B.cols(); ++k) {
      T acc = Ring<T>::zero_like(A(1, 1));
      for (size_t j = 1; j <= A.cols(); ++j)
        acc = acc + scale(A(i, j) * B(j, k), pq(qsign, sgn(int(j) - int(i))));
      R(i, k) = acc;
    }
  return R;
}

template <class T>
Matrix<T> q_power(const Matrix<T>& M, int m, int qsign = 1) {
  if (!M.square()) throw std::invalid_argument("q_power: non-square");
  Matrix<T> P = identity_like(M);
  for (int k = 0; k < m; ++k) P = star_q(P, M, qsign);
  return P;
}

template <class T>
Matrix<T> flip(const Matrix<T>& M) {
  size_t n = M.rows(), m = M.cols();
  Matrix<T> F(n, m);
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = 1; j <= m; ++j) F(i, j) = M(n - i + 1, m - j + 1);
  return F;
}

// Column p-commutation and cross relations of every 2x2 submatrix, p = q^qsign.
template <class T>
std::vector<T> manin_relations(const Matrix<T>& M, int qsign = 1) {
  std::vector<T> out;
  size_t n = M.rows(), m = M.cols();
  for (size_t i = 1; i <= n; ++i)
    for (size_t k = i + 1; k <= n; ++k) {
      for (size_t j = 1; j <= m; ++j)
        out.push_back(M(i, j) * M(k, j) - scale(M(k, j) * M(i, j), pq(qsign, -1)));
      for (size_t j = 1; j <= m; ++j)
        for (size_t l = j + 1; l <= m; ++l)
          out.push_back(M(i, j) * M(k, l) - M(k, l) * M(i, j) -
                        scale(M(k, j) * M(i, l), pq(qsign, -1)) +
                        scale(M(i, l) * M(k, j), pq(qsign, 1)));
    }
  return out;
}

}  // namespace qm
