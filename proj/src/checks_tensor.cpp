#include "check_util.hpp"
#include "qmanin/expr.hpp"
#include "qmanin/tensorrep.hpp"

namespace qm {
using namespace checks;

namespace {

std::string tagn(int n) { return " n=" + std::to_string(n); }

RatQ inv_factorial(int m) {
  long f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return RatQ(1) / RatQ(f);
}

void pyatov(Evidence& ev) {
  int top = int(ev.param("n"));
  const char* names[4] = {"P form", "antisymmetrizer form", "symmetrizer form", "(1-P)MM(1+P) form"};
  for (int n = 2; n <= top; ++n)
    for (int qs : {1, -1}) {
      std::string dir = qs > 0 ? "" : " q^-1 on M2M1";
      AlgebraHandle A = rq(n, n);
      auto res = pyatov_residuals(A.matrix(), qs);
      auto free = pyatov_residuals(freemat(n, n).matrix(), qs);
      auto rel = manin_relations(freemat(n, n).matrix());
      for (size_t k = 0; k < res.size(); ++k) {
        ev.zero_all(A, tensor_entries(res[k]), std::string(names[k]) + dir + tagn(n));
        ev.exact(same_span(tensor_entries(free[k]), rel),
                 std::string(names[k]) + " characterizes Manin matrices" + dir + tagn(n));
      }
    }
}

void antisym_invariance(Evidence& ev) {
  int top = int(ev.param("n")), mtop = int(ev.param("m"));
  for (int n = 2; n <= top; ++n)
    for (int m = 2; m <= mtop && (n < 3 || m <= 3); ++m) {
      AlgebraHandle A = rq(n, n);
      ev.zero_all(A, tensor_entries(antisym_invariance_residual(A.matrix(), m)),
                  "A M..M = A M..M A m=" + std::to_string(m) + tagn(n));
    }
}

void sym_invariance(Evidence& ev) {
  int top = int(ev.param("n")), mtop = int(ev.param("m"));
  for (int n = 2; n <= top; ++n)
    for (int m = 2; m <= mtop && (n < 3 || m <= 3); ++m) {
      AlgebraHandle A = rq(n, n);
      ev.zero_all(A, tensor_entries(sym_invariance_residual(A.matrix(), m)),
                  "M..M S = S M..M S m=" + std::to_string(m) + tagn(n));
    }
}

// Components of A_m M^(1)..M^(m) for an arbitrary matrix, and its trace.
void components(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    NCMatrix M = freemat(n, n).matrix();
    NCPoly zero = zero_of(freemat(n, n));
    for (int m = 1; m <= n; ++m) {
      Tensor<NCPoly> T = lift(antisym_q(n, m), freemat(n, n).one()) * mproduct(M, m);
      bool ok = true;
      for (size_t r = 0; r < T.dim() && ok; ++r) {
        MultiIndex I = T.multi(r);
        MultiIndex K = I;
        std::sort(K.begin(), K.end());
        bool repeats = has_repeats(I);
        for (size_t c = 0; c < T.dim(); ++c) {
          MultiIndex J = T.multi(c);
          NCPoly expect = repeats ? zero : (inv_factorial(m) * eps_q(I, -1)) * det_q(M.sub(K, J));
          if (!(T.get(r, c, zero) == expect)) {
            ok = false;
            break;
          }
        }
      }
      ev.exact(ok, "components m=" + std::to_string(m) + tagn(n));
      NCPoly tr = T.trace(zero), expect = zero;
      for (auto& K : increasing_subsets(n, m))
        for (auto& s : permutations(m)) {
          MultiIndex Ks;
          for (int i : s) Ks.push_back(K[i - 1]);
          expect += (inv_factorial(m) * eps_q(s, -1)) * det_q(M.sub(K, Ks));
        }
      ev.exact(tr == expect, "trace formula m=" + std::to_string(m) + tagn(n));
    }
  }
}

void trace_minors(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle C = cross_algebra(n);
    NCMatrix M = C.matrix();
    NCPoly one = C.one();
    std::vector<NCPoly> e = char_q(M);
    for (int m = 1; m <= n; ++m) {
      Tensor<NCPoly> T = lift(antisym_q(n, m), one) * mproduct(M, m);
      ev.zero(C, T.trace(zero_of(C)) - e[m], "trace is the sum of principal minors m=" + std::to_string(m) + tagn(n));
    }
  }
}

void amm_det(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = rq(n, n);
    NCMatrix M = A.matrix();
    Tensor<NCPoly> An = lift(antisym_q(n, n), A.one());
    NCPoly d = det_q(M);
    Tensor<NCPoly> res = An * mproduct(M, n) - An.map([&](const NCPoly& x) { return x * d; });
    ev.zero_all(A, tensor_entries(res), "A_n M..M = A_n det" + tagn(n));
  }
}

NCMatrix scaled(const NCPoly& c, const NCMatrix& X) {
  return X.map([&](const NCPoly& x) { return c * x; });
}

void cayley_hamilton(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = rq(n, n);
    NCMatrix M = A.matrix();
    std::vector<NCPoly> e = char_q(M);
    NCMatrix acc = q_power(M, n);
    for (int m = 1; m <= n; ++m) {
      NCMatrix t = scaled(e[m], q_power(M, n - m));
      acc = m % 2 ? acc - t : acc + t;
    }
    ev.zero_all(A, entries(acc), "characteristic polynomial annihilates M" + tagn(n));
  }
  AlgebraHandle A = rq(2, 2);
  NCMatrix M = A.matrix(), P2 = q_power(M, 2);
  const char* exact_form[4] = {"a^2 + q*b*c", "a*b + q*b*d", "q^-1*c*a + d*c", "d^2 + q^-1*c*b"};
  const char* short_form[4] = {"a^2 + q*b*c", "a*b + d*b", "a*c + d*c", "d^2 + q^-1*c*b"};
  for (int k = 0; k < 4; ++k) {
    NCPoly e = P2.data()[k];
    ev.exact(e == parse_expr(exact_form[k], A.alphabet()), std::string("second q-power ") + exact_form[k]);
    ev.zero(A, e - parse_expr(short_form[k], A.alphabet()), std::string("second q-power ") + short_form[k]);
  }
  NCMatrix two = P2 - scaled(trace(M), M) + scaled(det_q(M), identity_like(M));
  ev.zero_all(A, entries(two), "M^[2] - tr M M + det M = 0");
}

void newton(Evidence& ev) {
  int top = int(ev.param("n")), mtop = int(ev.param("m"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = rq(n, n);
    NCMatrix M = A.matrix();
    std::vector<NCPoly> e = char_q(M);
    std::vector<NCPoly> t(mtop + 1, zero_of(A));
    for (int k = 1; k <= mtop; ++k) t[k] = trace(q_power(M, k));
    auto E = [&](int k) { return k <= n ? e[k] : zero_of(A); };
    for (int m = 1; m <= mtop; ++m) {
      NCPoly rhs = zero_of(A);
      for (int k = 0; k < m; ++k) {
        NCPoly term = E(k) * t[m - k];
        rhs = (m + k + 1) % 2 ? rhs - term : rhs + term;
      }
      ev.zero(A, RatQ(m) * E(m) - rhs, "Newton identity m=" + std::to_string(m) + tagn(n));
    }
  }
  AlgebraHandle A = rq(2, 2);
  NCMatrix M = A.matrix();
  NCPoly t1 = trace(M), t2 = trace(q_power(M, 2)), t3 = trace(q_power(M, 3));
  RatQ half = RatQ(1) / RatQ(2);
  ev.zero(A, t3 - (t1 * t2 + half * (t2 * t1) - half * (t1 * t1 * t1)), "tr M^[3] through tr M, tr M^[2]");
  ev.zero(A,
          t3 - parse_expr("a^3 + q*b*c*a + q*a*b*c + q*d*b*c + q^-1*a*c*b + q^-1*d*c*b + d^3 + q^-1*c*b*d",
                          A.alphabet()),
          "tr M^[3] explicit");
}

// B = sum_{i<j, k<l} (-q)^{k+l-i-j} e det_{q^-1}(M_{\(kl), \(ij)}) (E_ik (x) E_jl - q E_jk (x) E_il)
Tensor<NCPoly> left_factor(const NCMatrix& M, const NCPoly& e) {
  int n = int(M.rows());
  NCPoly one = Ring<NCPoly>::one_like(e);
  Tensor<NCPoly> B(n, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          NCPoly c = neg_pq(1, k + l - i - j) *
                     (e * minor(M, complement({k, l}, n), complement({i, j}, n), -1, std::optional<NCPoly>(one)));
          B.add(B.index({i, j}), B.index({k, l}), c);
          B.add(B.index({j, i}), B.index({k, l}), -RatQ::q(1) * c);
        }
  return B;
}

AlgebraHandle inverse_algebra(int n, Side side) {
  std::string key = "rq:" + std::to_string(n) + (side == Side::right ? "[U right]" : "[U]") + "[e left]";
  return shared_algebra(key, [=] {
    AlgebraHandle B = localize_matrix(right_quantum(n, n), "M", "U", side);
    return localize(B, {det_q(B.matrix())}, {"e"}, Side::left);
  });
}

void inverse_tensor(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n)
    for (Side side : {Side::right, Side::both}) {
      AlgebraHandle X = inverse_algebra(n, side);
      NCMatrix M = X.matrix(), U = X.matrix("U");
      NCPoly one = X.one();
      Tensor<NCPoly> B = left_factor(M, X.gen("e"));
      Tensor<NCPoly> A = lift(antisym_q(n, 2), one);
      Tensor<NCPoly> M1 = embed_matrix(M, 1, 2), M2 = embed_matrix(M, 2, 2);
      Tensor<NCPoly> U1 = embed_matrix(U, 1, 2), U2 = embed_matrix(U, 2, 2);
      std::string tag = (side == Side::right ? " (right inverse)" : " (two-sided inverse)") + tagn(n);
      ev.zero_all(X, tensor_entries(B * A * M1 * M2 - A), "B A M1 M2 = A" + tag);
      ev.zero_all(X, tensor_entries(A * U2 * U1 * A - A * U2 * U1), "A U2 U1 A = A U2 U1" + tag);
      ev.zero_all(X, manin_relations(U, -1), "inverse is q^-1-Manin" + tag);
      NCPoly dU = det_q(U, -1), d = det_q(M);
      if (n == 2)
        ev.zero_all(X, tensor_entries(A * U2 * U1 - A.map([&](const NCPoly& x) { return x * dU; })),
                    "A U2 U1 = A det_{q^-1} U" + tag);
      ev.zero(X, d * dU - one, "det M det_{q^-1} U = 1" + tag);
      if (side == Side::both) ev.zero(X, dU * d - one, "det_{q^-1} U det M = 1" + tag);
      ev.require_nondegenerate(X, ev.cap());
    }
}

}  // namespace

void register_tensor_checks() {
  register_check({"pyatov", "tensor", "tensor forms of the Manin relations", {{"n", 3}},
                  Status::Proved, true, pyatov});
  register_check({"antisym_invariance", "tensor", "antisymmetrizer invariance of M^(1)..M^(m)",
                  {{"n", 3}, {"m", 4}}, Status::Proved, true, antisym_invariance});
  register_check({"sym_invariance", "tensor", "symmetrizer invariance of M^(1)..M^(m)",
                  {{"n", 3}, {"m", 4}}, Status::Proved, true, sym_invariance});
  register_check({"components", "tensor", "components and trace of A_m M^(1)..M^(m)", {{"n", 3}},
                  Status::Proved, true, components});
  register_check({"trace_minors", "tensor", "trace of A_m M^(1)..M^(m) as a sum of principal minors",
                  {{"n", 3}}, Status::Proved, true, trace_minors});
  register_check({"amm_det", "tensor", "A_n M^(1)..M^(n) = A_n det M", {{"n", 3}}, Status::Proved,
                  true, amm_det});
  register_check({"cayley_hamilton", "tensor", "Cayley-Hamilton theorem with q-powers",
                  {{"n", 3}, {"degree", 6}}, Status::Proved, true, cayley_hamilton});
  register_check({"newton", "tensor", "Newton identities", {{"n", 3}, {"m", 4}, {"degree", 6}},
                  Status::Proved, true, newton});
  register_check({"inverse_tensor", "tensor", "tensor relations for the inverse matrix",
                  {{"n", 2}, {"degree", 8}}, Status::Proved, true, inverse_tensor});
}

}  // namespace qm
