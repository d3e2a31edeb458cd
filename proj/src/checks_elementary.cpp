#include "check_util.hpp"
#include "qmanin/expr.hpp"
#include "qmanin/tensorrep.hpp"

namespace qm {
using namespace checks;

namespace {

// F(M,N)_ijkl = M_ij N_kl - q^{s(i-k)} q^{-s(j-l)} M_kl N_ij - q^{s(i-k)} M_kj N_il
//               + q^{-s(j-l)} M_il N_kj
NCPoly fpair(const NCMatrix& M, const NCMatrix& N, int i, int j, int k, int l) {
  RatQ a = RatQ::q(sgn(i - k)), b = RatQ::q(-sgn(j - l));
  return M(i, j) * N(k, l) - (a * b) * (M(k, l) * N(i, j)) - a * (M(k, j) * N(i, l)) +
         b * (M(i, l) * N(k, j));
}

std::vector<NCPoly> single_family(const NCMatrix& M, const NCMatrix& N) {
  std::vector<NCPoly> out;
  int n = int(M.rows()), m = int(M.cols());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= m; ++l) out.push_back(fpair(M, N, i, j, k, l));
  return out;
}

AlgebraHandle with_affine(const AlgebraHandle& base, const std::string& key, int m) {
  return shared_algebra(key + "(x)affine" + std::to_string(m),
                        [=] { return tensor_product(base, quantum_affine(m, "x")); });
}

AlgebraHandle with_grass(const AlgebraHandle& base, const std::string& key, int n) {
  return shared_algebra(key + "(x)grass" + std::to_string(n),
                        [=] { return tensor_product(base, q_grassmann(n, "psi")); });
}

// x~_i x~_k - q^{-1} x~_k x~_i for i < k, x~ = M x.
std::vector<NCPoly> coaction_x_residuals(const AlgebraHandle& A, int n, int m) {
  NCMatrix M = A.matrix("M");
  std::vector<NCPoly> xt;
  for (int i = 1; i <= n; ++i) {
    NCPoly s = zero_of(A);
    for (int j = 1; j <= m; ++j) s += M(i, j) * A.gen("x" + std::to_string(j));
    xt.push_back(s);
  }
  std::vector<NCPoly> out;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) out.push_back(xt[i] * xt[k] - RatQ::q(-1) * (xt[k] * xt[i]));
  return out;
}

// psi~_j^2 and psi~_i psi~_j + q psi~_j psi~_i, psi~ = psi M.
std::vector<NCPoly> coaction_psi_residuals(const AlgebraHandle& A, int n, int m) {
  NCMatrix M = A.matrix("M");
  std::vector<NCPoly> pt;
  for (int j = 1; j <= m; ++j) {
    NCPoly s = zero_of(A);
    for (int i = 1; i <= n; ++i) s += A.gen("psi" + std::to_string(i)) * M(i, j);
    pt.push_back(s);
  }
  std::vector<NCPoly> out;
  for (int j = 0; j < m; ++j) {
    out.push_back(pt[j] * pt[j]);
    for (int l = j + 1; l < m; ++l) out.push_back(pt[j] * pt[l] + RatQ::q(1) * (pt[l] * pt[j]));
  }
  return out;
}

// Coefficients of the normal forms of residuals in (free matrix) (x) B, as elements of the
// free algebra on the matrix entries.
std::vector<NCPoly> coefficient_family(const AlgebraHandle& F, const AlgebraHandle& free,
                                       const std::vector<NCPoly>& res, int degree) {
  std::vector<NCPoly> out;
  Gen split = Gen(free.alphabet()->size());
  for (auto& r : res)
    for (auto& [w, c] : coefficients_by_suffix(normal_form(F, r, degree), split, free.alphabet()))
      out.push_back(c);
  return out;
}

void coaction_x(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n)
    for (int m = 1; m <= top; ++m) {
      std::string key = "rq:" + dims(n, m);
      AlgebraHandle A = with_affine(rq(n, m), key, m);
      ev.zero_all(A, coaction_x_residuals(A, n, m), "coaction x " + dims(n, m));
      AlgebraHandle F = with_affine(freemat(n, m), "free:" + dims(n, m), m);
      int d = complete_degree(F, 2, ev.cap());
      if (d < 0) throw std::runtime_error("no complete system for " + F.name());
      auto coeffs = coefficient_family(F, freemat(n, m), coaction_x_residuals(F, n, m), d);
      ev.exact(same_span(coeffs, manin_relations(freemat(n, m).matrix())),
               "coaction x converse " + dims(n, m));
    }
}

void coaction_psi(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n)
    for (int m = 1; m <= top; ++m) {
      std::string key = "rq:" + dims(n, m);
      AlgebraHandle A = with_grass(rq(n, m), key, n);
      ev.zero_all(A, coaction_psi_residuals(A, n, m), "coaction psi " + dims(n, m));
      AlgebraHandle F = with_grass(freemat(n, m), "free:" + dims(n, m), n);
      int d = complete_degree(F, 2, ev.cap());
      if (d < 0) throw std::runtime_error("no complete system for " + F.name());
      auto coeffs = coefficient_family(F, freemat(n, m), coaction_psi_residuals(F, n, m), d);
      ev.exact(same_span(coeffs, manin_relations(freemat(n, m).matrix())),
               "coaction psi converse " + dims(n, m));
    }
}

void single_formula(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n)
    for (int m = 1; m <= top; ++m) {
      AlgebraHandle A = rq(n, m);
      NCMatrix M = A.matrix();
      ev.zero_all(A, single_family(M, M), "single relation " + dims(n, m));
      NCMatrix F = freemat(n, m).matrix();
      ev.exact(same_span(single_family(F, F), manin_relations(F)),
               "single relation spans " + dims(n, m));
    }
}

void sum_condition(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n)
    for (int m = 2; m <= top; ++m) {
      AlgebraHandle P = shared_algebra("rq*rq:" + dims(n, m), [=] {
        return tensor_product(right_quantum(n, m, "M"), right_quantum(n, m, "N"), false);
      });
      NCMatrix M = P.matrix("M"), N = P.matrix("N"), S = M + N;
      // bilinearity in the free algebra, then the Manin relations of M and N
      std::vector<NCPoly> fs = single_family(S, S), mixed;
      auto fmn = single_family(M, N), fnm = single_family(N, M);
      auto fmm = single_family(M, M), fnn = single_family(N, N);
      bool bilinear = true;
      for (size_t k = 0; k < fs.size(); ++k) {
        mixed.push_back(fmn[k] + fnm[k]);
        bilinear = bilinear && (fs[k] - fmm[k] - fnn[k] - mixed[k]).is_zero();
      }
      ev.exact(bilinear, "single relation of M+N splits " + dims(n, m));
      std::vector<NCPoly> res;
      for (size_t k = 0; k < fs.size(); ++k) res.push_back(fs[k] - mixed[k]);
      ev.zero_all(P, res, "M+N relation equals mixed terms " + dims(n, m));
      // the sufficient commutation makes the mixed terms vanish
      std::vector<NCPoly> comm;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= m; ++l)
              comm.push_back(M(i, j) * N(k, l) -
                             RatQ::q(sgn(i - k) - sgn(j - l)) * (N(k, l) * M(i, j)));
      AlgebraHandle Q = shared_algebra("rq*rq+comm:" + dims(n, m),
                                       [=] { return add_relations(P, P.name() + "+comm", comm); });
      ev.zero_all(Q, mixed, "mixed terms " + dims(n, m));
      ev.zero_all(Q, manin_relations(Q.matrix("M") + Q.matrix("N")), "M+N manin " + dims(n, m));
    }
}

void product_commuting(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n)
    for (int m = 1; m <= top; ++m)
      for (int r = 1; r <= top; ++r) {
        AlgebraHandle A = shared_algebra("rq(x)rq:" + dims(n, m) + "," + dims(m, r), [=] {
          return tensor_product(right_quantum(n, m, "M"), right_quantum(m, r, "N"));
        });
        ev.zero_all(A, manin_relations(A.matrix("M") * A.matrix("N")),
                    "product " + dims(n, m) + "*" + dims(m, r));
      }
}

AlgebraHandle commuting_algebra(const std::vector<std::string>& names) {
  AlgebraHandle F = free_algebra(names);
  std::vector<NCPoly> rels;
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      rels.push_back(F.gen(names[j]) * F.gen(names[i]) - F.gen(names[i]) * F.gen(names[j]));
  return add_relations(F, "Comm(" + std::to_string(names.size()) + ")", rels);
}

void closure_properties(Evidence& ev) {
  int n = int(ev.param("n"));
  AlgebraHandle A = rq(n, n);
  NCMatrix M = A.matrix();
  for (int k = 2; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (auto& I : increasing_subsets(n, k))
        for (auto& J : increasing_subsets(n, l))
          ev.zero_all(A, manin_relations(M.sub(I, J)), "submatrix " + show(I) + show(J));
  std::vector<std::string> names{"c"};
  for (int i = 1; i <= n; ++i) names.push_back("d" + std::to_string(i));
  AlgebraHandle B = shared_algebra("rq(x)comm:" + std::to_string(n),
                                   [=] { return tensor_product(right_quantum(n, n), commuting_algebra(names)); });
  NCMatrix X = B.matrix(), cX(n, n), DX(n, n), XD(n, n), D(n, n, zero_of(B));
  for (int i = 1; i <= n; ++i) D(i, i) = B.gen("d" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) cX(i, j) = B.gen("c") * X(i, j);
  ev.zero_all(B, manin_relations(cX), "scalar multiple");
  ev.zero_all(B, manin_relations(D * X), "diagonal times M");
  ev.zero_all(B, manin_relations(X * D), "M times diagonal");
  ev.zero_all(B, manin_relations(D), "commuting diagonal");
}

void rank_one_examples(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n)
    for (int m = 1; m <= top; ++m) {
      std::vector<std::string> rs;
      for (int j = 1; j <= m; ++j) rs.push_back("r" + std::to_string(j));
      AlgebraHandle A = shared_algebra("affine(x)free:" + dims(n, m), [=] {
        return tensor_product(quantum_affine(n, "x"), free_algebra(rs));
      });
      NCMatrix X(n, m);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) X(i, j) = A.gen("x" + std::to_string(i)) * A.gen(rs[j - 1]);
      ev.zero_all(A, manin_relations(X), "column times row " + dims(n, m));
    }
  // a matrix with repeated columns is Manin exactly when the column q-commutes
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle F = freemat(n, 1);
    NCMatrix v = F.matrix();
    for (int reps = 1; reps <= 3; ++reps) {
      std::vector<int> cols(reps, 1);
      std::vector<int> rows;
      for (int i = 1; i <= n; ++i) rows.push_back(i);
      ev.exact(same_span(manin_relations(v.sub(rows, cols)), manin_relations(v)),
               "repeated column x" + std::to_string(reps) + " n=" + std::to_string(n));
    }
    AlgebraHandle C = rq(n, 1);
    NCMatrix c = C.matrix();
    std::vector<int> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(i);
    ev.zero_all(C, manin_relations(c.sub(rows, {1, 1, 1})), "repeated column in RQ");
  }
  // a single row has no relations; a single column only its q-commutation
  AlgebraHandle R = freemat(1, top);
  ev.exact(manin_relations(R.matrix()).empty(), "single row");
}

void flip_check(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = rq(n, n);
    NCMatrix M = A.matrix();
    ev.zero_all(A, manin_relations(flip(M), -1), "flip is q^-1-Manin n=" + std::to_string(n));
    ev.zero(A, det_q(M) - det_q(flip(M), -1), "det of flip n=" + std::to_string(n));
  }
  AlgebraHandle A = rq(2, 2);
  ev.exact(det_q(A.matrix()) == parse_expr("a*d - q^-1*c*b", A.alphabet()), "2x2 determinant");
  ev.exact(det_q(flip(A.matrix()), -1) == parse_expr("d*a - q*b*c", A.alphabet()),
           "2x2 flipped determinant");
}

Tensor<RatQ> funq_r(int n) {
  Tensor<RatQ> R(n, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      size_t r = R.index({i, j});
      R.add(r, r, i == j ? RatQ::q(-1) : RatQ(1));
      if (i > j) R.add(r, R.index({j, i}), RatQ::q(-1) - RatQ::q(1));
    }
  return R;
}

void funq(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    std::string tag = " n=" + std::to_string(n);
    AlgebraHandle A = shared_algebra("funq:" + std::to_string(n), [=] { return quantum_matrices(n); });
    NCMatrix T = A.matrix();
    ev.zero_all(A, manin_relations(T), "T manin" + tag);
    ev.zero_all(A, manin_relations(T.transpose()), "T^t manin" + tag);
    std::vector<NCPoly> both = manin_relations(T);
    for (auto& r : manin_relations(T.transpose())) both.push_back(r);
    ev.exact(same_span(A.presentation().relations, both), "relations are both Manin families" + tag);
    Tensor<NCPoly> R = lift(funq_r(n), A.one());
    Tensor<NCPoly> T1 = embed_matrix(T, 1, 2), T2 = embed_matrix(T, 2, 2);
    ev.zero_all(A, tensor_entries(R * T1 * T2 - T2 * T1 * R), "RTT" + tag);
  }
}

Params sweep(long n) { return {{"n", n}, {"degree", 4}}; }

}  // namespace

void register_elementary_checks() {
  register_check({"coaction_x", "elementary", "coaction on the quantum plane characterizes Manin matrices",
                  sweep(3), Status::Proved, true, coaction_x});
  register_check({"coaction_psi", "elementary",
                  "coaction on the q-Grassmann algebra characterizes Manin matrices", sweep(3),
                  Status::Proved, true, coaction_psi});
  register_check({"single_formula", "elementary", "single-formula form of the Manin relations",
                  sweep(3), Status::Proved, true, single_formula});
  register_check({"sum_condition", "elementary", "Manin property of a sum of Manin matrices",
                  sweep(3), Status::Proved, true, sum_condition});
  register_check({"product_commuting", "elementary",
                  "product of Manin matrices with commuting entries", sweep(3), Status::Proved,
                  true, product_commuting});
  register_check({"closure_properties", "elementary",
                  "submatrices, scalar and diagonal multiples of Manin matrices", sweep(3),
                  Status::Proved, true, closure_properties});
  register_check({"rank_one_examples", "elementary", "rank one and repeated column examples",
                  sweep(3), Status::Proved, true, rank_one_examples});
  register_check({"flip", "elementary", "flipped Manin matrix and its determinant", sweep(3),
                  Status::Proved, true, flip_check});
  register_check({"funq", "elementary", "quantum matrix group relations and RTT", sweep(3),
                  Status::Proved, true, funq});
}

}  // namespace qm
