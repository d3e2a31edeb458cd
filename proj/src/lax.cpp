#include "qmanin/lax.hpp"

namespace qm {

VOp shift_op(const VOp& f, int k) {
  if (k == 0) return f;
  return f.map([k](const RatZW& x) { return x.shifted(Spectral::z, k); });
}

VOp swap_op(const VOp& f) {
  return f.map([](const RatZW& x) { return x.swapped(); });
}

QDiffOp QDiffOp::operator-() const {
  QDiffOp r = *this;
  for (auto& [k, f] : r.c_) f = f * RatQ(-1);
  return r;
}

QDiffOp operator+(const QDiffOp& a, const QDiffOp& b) {
  QDiffOp r = a.is_zero() && a.n_ == 0 ? QDiffOp(b.n_, b.m_) : a;
  for (auto& [k, f] : b.c_) {
    auto it = r.c_.find(k);
    if (it == r.c_.end()) {
      r.c_.emplace(k, f);
    } else {
      it->second = it->second + f;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  return r;
}

// (f s^a)(g s^b) = f g(q^{2a} z) s^{a+b}
QDiffOp operator*(const QDiffOp& a, const QDiffOp& b) {
  QDiffOp r(a.n_ ? a.n_ : b.n_, a.m_ ? a.m_ : b.m_);
  for (auto& [ka, f] : a.c_)
    for (auto& [kb, g] : b.c_) r = r + QDiffOp(f * shift_op(g, ka), ka + kb);
  return r;
}

QDiffOp operator*(const QDiffOp& a, const RatQ& c) {
  if (c.is_zero()) return QDiffOp(a.n_, a.m_);
  QDiffOp r = a;
  for (auto& [k, f] : r.c_) f = f * c;
  return r;
}

LaxMatrix::LaxMatrix(int n, std::vector<RatQ> a, bool scaled) : n_(n), a_(std::move(a)) {
  if (n < 1) throw LaxError("lax: n must be positive");
  if (a_.empty()) throw LaxError("lax: at least one site");
  for (auto& x : a_)
    if (x.is_zero()) throw LaxError("lax: pole collision (zero inhomogeneity)");
  int m = 1 + sites();
  L_ = VOp::identity(n, m, RatZW(1));
  RatZW z = RatZW::z();
  for (int j = 1; j <= sites(); ++j) {
    RatZW aj(a_[j - 1]);
    VOp R = scaled ? r_matrix_scaled<RatZW>(n, z, aj) : r_matrix<RatZW>(n, z / aj);
    L_ = L_ * embed(R, {1, 1 + j}, m);
  }
}

VOp LaxMatrix::entry(int i, int j, int shift) const {
  return first_factor_block(at(shift), i, j);
}

Matrix<VOp> LaxMatrix::matrix(int shift) const {
  VOp L = at(shift);
  Matrix<VOp> M(n_, n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) M(i, j) = first_factor_block(L, i, j);
  return M;
}

namespace {

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

// L^{(k)}(q^{2 shift} z) inside k_aux auxiliary factors followed by V.
VOp embed_lax(const VOp& L, int k, int aux, int sites) {
  std::vector<int> pos{k};
  for (int s = 1; s <= sites; ++s) pos.push_back(aux + s);
  return embed(L, pos, aux + sites);
}

}  // namespace

VOp rll_residual(const LaxMatrix& L) {
  int n = L.n(), N = L.sites(), m = 2 + N;
  VOp R = embed(r_matrix<RatZW>(n, RatZW::z() / RatZW::w()), {1, 2}, m);
  VOp L1 = embed_lax(L.full(), 1, 2, N);
  VOp L2 = embed_lax(swap_op(L.full()), 2, 2, N);
  return R * L1 * L2 - L2 * L1 * R;
}

Matrix<QDiffOp> manin_from_lax(const LaxMatrix& L, bool transposed) {
  int n = L.n();
  Matrix<QDiffOp> M(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      M(i, j) = transposed ? QDiffOp(L.entry(j, i), -1) : QDiffOp(L.entry(i, j), 1);
  return M;
}

VOp qdet_lax(const LaxMatrix& L) {
  int n = L.n();
  std::vector<Matrix<VOp>> Ls;
  for (int k = 0; k < n; ++k) Ls.push_back(L.matrix(k));
  VOp acc(n, L.sites());
  for (auto& tau : permutations(n)) {
    VOp prod = Ls[0](tau[0], 1);
    for (int c = 2; c <= n; ++c) prod = prod * Ls[c - 1](tau[c - 1], c);
    acc = acc + prod * neg_pq(1, -inversions(tau));
  }
  return acc;
}

namespace {

// A_k L1(z) L2(q^2 z) ... Lk(q^{2(k-1)} z) on aux^k (x) V.
VOp fused(const LaxMatrix& L, int k) {
  int n = L.n(), N = L.sites(), m = k + N;
  VOp acc = embed(lift(antisym_q(n, k), RatZW(1)), range(1, k), m);
  for (int i = 1; i <= k; ++i) acc = acc * embed_lax(L.at(i - 1), i, k, N);
  return acc;
}

}  // namespace

VOp fused_qdet_residual(const LaxMatrix& L) {
  int n = L.n(), N = L.sites();
  VOp A = embed(lift(antisym_q(n, n), RatZW(1)), range(1, n), n + N);
  VOp D = embed(qdet_lax(L), range(n + 1, n + N), n + N);
  return fused(L, n) - A * D;
}

VOp t_k(const LaxMatrix& L, int k) {
  if (k == 0) return L.identity_v();
  if (k > L.n()) return VOp(L.n(), L.sites());
  return fused(L, k).partial_trace(range(1, k));
}

Matrix<VOp> shift_matrix(const Matrix<VOp>& M, int k) {
  return M.map([k](const VOp& x) { return shift_op(x, k); });
}

std::vector<Matrix<VOp>> l_powers(const LaxMatrix& L, int m) {
  int n = L.n();
  Matrix<VOp> I(n, n, VOp(n, L.sites()));
  for (int i = 1; i <= n; ++i) I(i, i) = L.identity_v();
  std::vector<Matrix<VOp>> out{I};
  for (int k = 1; k <= m; ++k) out.push_back(star_q(out.back(), L.matrix(k - 1)));
  return out;
}

VOp i_k(const LaxMatrix& L, int k) { return trace(l_powers(L, k).back()); }

Matrix<VOp> lax_cayley_hamilton(const LaxMatrix& L) {
  int n = L.n();
  auto P = l_powers(L, n);
  Matrix<VOp> acc(n, n, VOp(n, L.sites()));
  for (int m = 0; m <= n; ++m) {
    VOp t = t_k(L, m) * RatQ(m % 2 ? -1 : 1);
    Matrix<VOp> Pm = shift_matrix(P[n - m], m);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) acc(i, j) = acc(i, j) + t * Pm(i, j);
  }
  return acc;
}

VOp lax_newton(const LaxMatrix& L, int m) {
  VOp acc = t_k(L, m) * RatQ(m);
  for (int k = 0; k < m; ++k) {
    int sign = (m + k + 1) % 2 ? -1 : 1;
    acc = acc - t_k(L, k) * shift_op(i_k(L, m - k), k) * RatQ(sign);
  }
  return acc;
}

VOp commutator_zw(const VOp& X, const VOp& Y) {
  VOp Yw = swap_op(Y);
  return X * Yw - Yw * X;
}

}  // namespace qm
