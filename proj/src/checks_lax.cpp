#include "check_util.hpp"
#include "qmanin/lax.hpp"

namespace qm {
using namespace checks;

namespace {

std::string tagn(int n) { return " n=" + std::to_string(n); }
std::string tagnN(int n, int N) { return " n=" + std::to_string(n) + " N=" + std::to_string(N); }

RatQ factorial(int m) {
  long f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return RatQ(f);
}

// Inhomogeneities of the chain with N sites: 1, q, q^3, ...
std::vector<RatQ> chain(int N) {
  std::vector<RatQ> a;
  for (int j = 0; j < N; ++j) a.push_back(RatQ::q(j == 0 ? 0 : 2 * j - 1));
  return a;
}

template <class F>
void for_chains(Evidence& ev, F f) {
  int top = int(ev.param("n")), sites = int(ev.param("sites"));
  for (int n = 2; n <= top; ++n)
    for (int N = 1; N <= sites; ++N) f(n, N, LaxMatrix(n, chain(N)));
}

bool zero_matrix(const Matrix<VOp>& M) {
  for (auto& x : M.data())
    if (!x.is_zero()) return false;
  return true;
}

bool all_zero(const std::vector<QDiffOp>& xs) {
  for (auto& x : xs)
    if (!x.is_zero()) return false;
  return true;
}

void ybe(Evidence& ev) {
  int top = int(ev.param("n"));
  RatZW z = RatZW::z(), w = RatZW::w();
  for (int n = 2; n <= top; ++n) {
    VOp R12 = embed(r_matrix<RatZW>(n, z / w), {1, 2}, 3);
    VOp R13 = embed(r_matrix<RatZW>(n, z), {1, 3}, 3);
    VOp R23 = embed(r_matrix<RatZW>(n, w), {2, 3}, 3);
    ev.exact((R12 * R13 * R23 - R23 * R13 * R12).is_zero(), "Yang-Baxter equation" + tagn(n));
  }
}

void r_special(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    Tensor<RatQ> R = r_matrix<RatQ>(n, RatQ::q(-2));
    Tensor<RatQ> one = Tensor<RatQ>::identity(n, 2, RatQ(1));
    ev.exact(R == one - perm_q(n), "R(q^-2) = 1 - P" + tagn(n));
    ev.exact(R == antisym_q(n, 2) * RatQ(2), "R(q^-2) = 2 A_2" + tagn(n));
    Tensor<RatZW> Rz = r_matrix<RatZW>(n, RatZW::z());
    Tensor<RatZW> R1 = Rz.map([](const RatZW& x) { return x.subs_q(Rational(1)); });
    ev.exact(R1 == Tensor<RatZW>::identity(n, 2, RatZW(1)), "R(z) = 1 at q = 1" + tagn(n));
  }
}

void fusion(Evidence& ev) {
  int top = int(ev.param("n")), mtop = int(ev.param("m"));
  for (int n = 2; n <= top; ++n)
    for (int m = 2; m <= mtop; ++m) {
      std::vector<RatQ> pts;
      for (int k = 0; k < m; ++k) pts.push_back(RatQ::q(2 * k));
      Tensor<RatQ> rows = big_r<RatQ>(n, pts), cols = big_r<RatQ>(n, pts, true);
      std::string tag = " m=" + std::to_string(m) + tagn(n);
      ev.exact(rows == antisym_q(n, m) * factorial(m), "R(z, q^2 z, ...) = m! A_m" + tag);
      ev.exact(rows == cols, "row and column orderings agree" + tag);
    }
}

// R(z/w) L1(z) L2(w) = L2(w) L1(z) R(z/w) for the block L_II.
bool block_rll(const LaxMatrix& L, const MultiIndex& I) {
  int s = int(I.size());
  Tensor<RatZW> R = r_matrix<RatZW>(s, RatZW::z() / RatZW::w());
  Matrix<VOp> Lz = L.matrix(), Lw = Lz.map([](const VOp& x) { return swap_op(x); });
  VOp zero(L.n(), L.sites());
  auto idx = [&](int a, int b) { return R.index({a, b}); };
  for (int i = 1; i <= s; ++i)
    for (int k = 1; k <= s; ++k)
      for (int j = 1; j <= s; ++j)
        for (int l = 1; l <= s; ++l) {
          VOp lhs = zero, rhs = zero;
          for (int a = 1; a <= s; ++a)
            for (int b = 1; b <= s; ++b) {
              RatZW x = R.get(idx(i, k), idx(a, b), RatZW()), y = R.get(idx(a, b), idx(j, l), RatZW());
              if (!x.is_zero())
                lhs = lhs + (Lz(I[a - 1], I[j - 1]) * Lw(I[b - 1], I[l - 1])).map(
                                [&](const RatZW& v) { return x * v; });
              if (!y.is_zero())
                rhs = rhs + (Lw(I[k - 1], I[b - 1]) * Lz(I[i - 1], I[a - 1])).map(
                                [&](const RatZW& v) { return v * y; });
            }
          if (!(lhs - rhs).is_zero()) return false;
        }
  return true;
}

void rll(Evidence& ev) {
  for_chains(ev, [&](int n, int N, const LaxMatrix& L) {
    ev.exact(rll_residual(L).is_zero(), "RLL relation" + tagnN(n, N));
    if (n > 2)
      for (auto& I : increasing_subsets(n, 2))
        ev.exact(block_rll(L, I), "RLL for the block " + show(I) + tagnN(n, N));
  });
}

void manin_from_lax_check(Evidence& ev) {
  for_chains(ev, [&](int n, int N, const LaxMatrix& L) {
    ev.exact(all_zero(manin_relations(manin_from_lax(L))), "L(z) sigma is q-Manin" + tagnN(n, N));
    ev.exact(all_zero(manin_relations(manin_from_lax(L, true))),
             "L(z)^T sigma^-1 is q-Manin" + tagnN(n, N));
  });
}

void qdet_lax_check(Evidence& ev) {
  for_chains(ev, [&](int n, int N, const LaxMatrix& L) {
    VOp qd = qdet_lax(L);
    ev.exact(det_q(manin_from_lax(L)) == QDiffOp(qd, n), "det(L sigma) = qdet L sigma^n" + tagnN(n, N));
    ev.exact(fused_qdet_residual(L).is_zero(), "A_n L1(z)..Ln(q^{2(n-1)} z) = A_n qdet L(z)" + tagnN(n, N));
    if (n == 2) {
      VOp two = L.entry(1, 1) * L.entry(2, 2, 1) - L.entry(2, 1) * L.entry(1, 2, 1) * RatQ::q(-1);
      ev.exact(qd == two, "2x2 quantum determinant" + tagnN(n, N));
    }
  });
}

void tk_commute(Evidence& ev) {
  int ktop = int(ev.param("k"));
  for_chains(ev, [&](int n, int N, const LaxMatrix& L) {
    Matrix<QDiffOp> M = manin_from_lax(L);
    ev.exact(t_k(L, 1) == trace(L.matrix()), "t_1 = tr L" + tagnN(n, N));
    for (int k = 1; k <= n; ++k) {
      QDiffOp sum(n, N);
      for (auto& I : increasing_subsets(n, k)) sum = sum + minor(M, I, I);
      ev.exact(sum == QDiffOp(t_k(L, k), k),
               "t_" + std::to_string(k) + " from principal minors" + tagnN(n, N));
    }
    for (int k = 1; k <= std::min(n, ktop); ++k)
      for (int l = k; l <= std::min(n, ktop); ++l)
        ev.exact(commutator_zw(t_k(L, k), t_k(L, l)).is_zero(),
                 "[t_" + std::to_string(k) + "(z), t_" + std::to_string(l) + "(w)] = 0" + tagnN(n, N));
  });
}

void ik_commute(Evidence& ev) {
  int ktop = int(ev.param("k"));
  for_chains(ev, [&](int n, int N, const LaxMatrix& L) {
    std::vector<VOp> I{L.identity_v()}, t{L.identity_v()};
    for (int k = 1; k <= ktop; ++k) {
      I.push_back(i_k(L, k));
      t.push_back(t_k(L, k));
    }
    ev.exact(I[1] == t[1], "I_1 = t_1" + tagnN(n, N));
    for (int k = 1; k <= ktop; ++k)
      for (int l = 1; l <= ktop; ++l) {
        std::string kl = std::to_string(k) + "(z), ", ls = std::to_string(l) + "(w)] = 0";
        if (l >= k) ev.exact(commutator_zw(I[k], I[l]).is_zero(), "[I_" + kl + "I_" + ls + tagnN(n, N));
        ev.exact(commutator_zw(I[k], t[l]).is_zero(), "[I_" + kl + "t_" + ls + tagnN(n, N));
      }
  });
}

void lax_ch(Evidence& ev) {
  for_chains(ev, [&](int n, int N, const LaxMatrix& L) {
    ev.exact(zero_matrix(lax_cayley_hamilton(L)), "Cayley-Hamilton for L" + tagnN(n, N));
    auto P = l_powers(L, 1);
    ev.exact(P[1] == L.matrix(), "L^[1] = L" + tagnN(n, N));
  });
}

void lax_newton_check(Evidence& ev) {
  int mtop = int(ev.param("m"));
  for_chains(ev, [&](int n, int N, const LaxMatrix& L) {
    for (int m = 1; m <= mtop; ++m)
      ev.exact(lax_newton(L, m).is_zero(), "Newton identity for L m=" + std::to_string(m) + tagnN(n, N));
  });
}

}  // namespace

void register_lax_checks() {
  register_check({"ybe", "lax", "Yang-Baxter equation for the trigonometric R-matrix", {{"n", 3}},
                  Status::Proved, true, ybe});
  register_check({"r_special", "lax", "R-matrix at z = q^-2 and at q = 1", {{"n", 3}},
                  Status::Proved, true, r_special});
  register_check({"fusion", "lax", "fusion of R-matrices into the antisymmetrizer",
                  {{"n", 3}, {"m", 4}}, Status::Proved, true, fusion});
  register_check({"rll", "lax", "RLL relation for the L-operators", {{"n", 3}, {"sites", 2}},
                  Status::Proved, true, rll});
  register_check({"manin_from_lax", "lax", "q-Manin matrices from L-operators",
                  {{"n", 3}, {"sites", 2}}, Status::Proved, true, manin_from_lax_check});
  register_check({"qdet_lax", "lax", "quantum determinant of an L-operator", {{"n", 3}, {"sites", 2}},
                  Status::Proved, true, qdet_lax_check});
  register_check({"tk_commute", "lax", "commuting family t_k(z)", {{"n", 2}, {"sites", 2}, {"k", 2}},
                  Status::Proved, true, tk_commute});
  register_check({"ik_commute", "lax", "commuting family I_k(z)", {{"n", 2}, {"sites", 2}, {"k", 2}},
                  Status::Proved, true, ik_commute});
  register_check({"lax_cayley_hamilton", "lax", "Cayley-Hamilton theorem for L-operators",
                  {{"n", 3}, {"sites", 1}}, Status::Proved, true, lax_ch});
  register_check({"lax_newton", "lax", "Newton identities for L-operators",
                  {{"n", 2}, {"sites", 2}, {"m", 3}}, Status::Proved, true, lax_newton_check});
}

}  // namespace qm
