#pragma once
#include <vector>

#include "qmanin/ratzw.hpp"
#include "qmanin/tensor.hpp"

namespace qm {

using Perm = MultiIndex;  // one-line notation, 1-based

// Adjacent transpositions s_k with tau = s_{k1} s_{k2} ... (composition right to left).
std::vector<int> reduced_word(const Perm& tau);
Perm compose(const Perm& a, const Perm& b);  // (a b)(i) = a(b(i))

// P^q = sum_ij p^{sgn(i-j)} E_ij (x) E_ji with p = q^qsign.
Tensor<RatQ> perm_q(int n, int qsign = 1);
Tensor<RatQ> pi_q(int n, int m, const Perm& tau, int qsign = 1);
Tensor<RatQ> antisym_q(int n, int m, int qsign = 1);
Tensor<RatQ> sym_q(int n, int m, int qsign = 1);
// Rank of an exact RatQ operator.
size_t rank(const Tensor<RatQ>& t);

// R(x) with x the spectral ratio.
template <class S>
Tensor<S> r_matrix(int n, const S& x) {
  S one(1);
  S inv = one / (x - one);
  RatQ qq = RatQ::q(1), qi = RatQ::q(-1);
  S diag = (x * qq - one * qi) * inv;
  S up = x * (qq - qi) * inv;
  S low = one * (qq - qi) * inv;
  Tensor<S> R(n, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      size_t r = R.index({i, j});
      if (i == j) {
        R.set(r, r, diag);
      } else {
        R.set(r, r, one);
        // E_ij (x) E_ji maps e_j (x) e_i to e_i (x) e_j
        R.set(r, R.index({j, i}), i < j ? up : low);
      }
    }
  return R;
}

// (u - v) R(u/v): polynomial in u, v.
template <class S>
Tensor<S> r_matrix_scaled(int n, const S& u, const S& v) {
  RatQ qq = RatQ::q(1), qi = RatQ::q(-1);
  Tensor<S> R(n, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      size_t r = R.index({i, j});
      if (i == j) {
        R.set(r, r, u * qq - v * qi);
      } else {
        R.set(r, r, u - v);
        R.set(r, R.index({j, i}), (i < j ? u : v) * (qq - qi));
      }
    }
  return R;
}

// Ordered products of R^{(ij)}(z_i/z_j), i < j: row-major and column-major orderings.
template <class S>
Tensor<S> big_r(int n, const std::vector<S>& z, bool column_order = false) {
  int m = int(z.size());
  Tensor<S> acc = Tensor<S>::identity(n, m, S(1));
  auto factor = [&](int i, int j) { return embed(r_matrix<S>(n, z[i - 1] / z[j - 1]), {i, j}, m); };
  if (!column_order) {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) acc = acc * factor(i, j);
  } else {
    for (int j = 2; j <= m; ++j)
      for (int i = 1; i < j; ++i) acc = acc * factor(i, j);
  }
  return acc;
}

// The four tensor residuals of the q-Manin criterion for M^{(1)} M^{(2)}
// (qsign = -1 gives the q^{-1} forms on M^{(2)} M^{(1)}).
std::vector<Tensor<NCPoly>> pyatov_residuals(const NCMatrix& M, int qsign = 1);
// A_m M^(1)...M^(m) (1 - A_m) and (1 - S_m) M^(1)...M^(m) S_m.
Tensor<NCPoly> mproduct(const NCMatrix& M, int m);
Tensor<NCPoly> antisym_invariance_residual(const NCMatrix& M, int m);
Tensor<NCPoly> sym_invariance_residual(const NCMatrix& M, int m);

}  // namespace qm
