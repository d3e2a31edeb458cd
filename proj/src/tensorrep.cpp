#include "qmanin/tensorrep.hpp"

#include <atomic>

namespace qm {

namespace {
std::atomic<bool> g_tensor_parallel{true};
}

void set_tensor_parallel(bool on) { g_tensor_parallel = on; }
bool tensor_parallel() { return g_tensor_parallel; }

std::vector<int> reduced_word(const Perm& tau) {
  Perm t = tau;
  std::vector<int> word;
  for (;;) {
    size_t i = 0;
    while (i + 1 < t.size() && t[i] < t[i + 1]) ++i;
    if (i + 1 >= t.size()) break;
    std::swap(t[i], t[i + 1]);  // t <- t s_{i+1}
    word.push_back(int(i) + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Tensor<RatQ> perm_q(int n, int qsign) {
  Tensor<RatQ> P(n, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) P.set(P.index({i, j}), P.index({j, i}), pq(qsign, sgn(i - j)));
  return P;
}

Tensor<RatQ> pi_q(int n, int m, const Perm& tau, int qsign) {
  Tensor<RatQ> acc = Tensor<RatQ>::identity(n, m, RatQ(1));
  Tensor<RatQ> P = perm_q(n, qsign);
  for (int k : reduced_word(tau)) acc = acc * embed(P, {k, k + 1}, m);
  return acc;
}

namespace {

Tensor<RatQ> symmetrize(int n, int m, int qsign, bool alternating) {
  Tensor<RatQ> acc(n, m);
  RatQ fact(1);
  for (int k = 2; k <= m; ++k) fact *= RatQ(k);
  for (auto& tau : permutations(m)) {
    RatQ s = (alternating && inversions(tau) % 2) ? RatQ(-1) : RatQ(1);
    acc = acc + pi_q(n, m, tau, qsign) * s;
  }
  return acc * fact.inverse();
}

}  // namespace

Tensor<RatQ> antisym_q(int n, int m, int qsign) { return symmetrize(n, m, qsign, true); }
Tensor<RatQ> sym_q(int n, int m, int qsign) { return symmetrize(n, m, qsign, false); }

size_t rank(const Tensor<RatQ>& t) {
  size_t d = t.dim();
  std::vector<std::vector<RatQ>> a(d, std::vector<RatQ>(d));
  for (size_t r = 0; r < d; ++r)
    for (auto& [c, v] : t.row(r)) a[r][c] = v;
  size_t rk = 0;
  for (size_t col = 0; col < d && rk < d; ++col) {
    size_t piv = rk;
    while (piv < d && a[piv][col].is_zero()) ++piv;
    if (piv == d) continue;
    std::swap(a[piv], a[rk]);
    RatQ inv = a[rk][col].inverse();
    for (size_t r = rk + 1; r < d; ++r) {
      if (a[r][col].is_zero()) continue;
      RatQ f = a[r][col] * inv;
      for (size_t c = col; c < d; ++c)
        if (!a[rk][c].is_zero()) a[r][c] -= f * a[rk][c];
    }
    ++rk;
  }
  return rk;
}

Tensor<NCPoly> mproduct(const NCMatrix& M, int m) {
  int n = int(M.rows());
  NCPoly one = Ring<NCPoly>::one_like(M(1, 1));
  Tensor<NCPoly> acc = Tensor<NCPoly>::identity(n, m, one);
  for (int k = 1; k <= m; ++k) acc = acc * embed_matrix(M, k, m);
  return acc;
}

std::vector<Tensor<NCPoly>> pyatov_residuals(const NCMatrix& M, int qsign) {
  int n = int(M.rows());
  NCPoly one = Ring<NCPoly>::one_like(M(1, 1));
  Tensor<NCPoly> M1 = embed_matrix(M, 1, 2), M2 = embed_matrix(M, 2, 2);
  Tensor<NCPoly> MM = qsign > 0 ? M1 * M2 : M2 * M1;
  Tensor<NCPoly> P = lift(perm_q(n, qsign), one);
  Tensor<NCPoly> A = lift(antisym_q(n, 2, qsign), one);
  Tensor<NCPoly> S = lift(sym_q(n, 2, qsign), one);
  Tensor<NCPoly> I = Tensor<NCPoly>::identity(n, 2, one);
  return {
      (MM - P * MM * P) - (P * MM - MM * P),
      A * MM * A - A * MM,
      S * MM * S - MM * S,
      (I - P) * MM * (I + P),
  };
}

Tensor<NCPoly> antisym_invariance_residual(const NCMatrix& M, int m) {
  int n = int(M.rows());
  NCPoly one = Ring<NCPoly>::one_like(M(1, 1));
  Tensor<NCPoly> A = lift(antisym_q(n, m), one);
  Tensor<NCPoly> I = Tensor<NCPoly>::identity(n, m, one);
  return A * mproduct(M, m) * (I - A);
}

Tensor<NCPoly> sym_invariance_residual(const NCMatrix& M, int m) {
  int n = int(M.rows());
  NCPoly one = Ring<NCPoly>::one_like(M(1, 1));
  Tensor<NCPoly> S = lift(sym_q(n, m), one);
  Tensor<NCPoly> I = Tensor<NCPoly>::identity(n, m, one);
  return (I - S) * mproduct(M, m) * S;
}

}  // namespace qm
