#include "check_util.hpp"

namespace qm {
using namespace checks;

namespace {

std::string tagn(int n) { return " n=" + std::to_string(n); }

AlgebraHandle inv_both(int n) {
  return shared_algebra("rq:" + std::to_string(n) + "[U]",
                        [=] { return localize_matrix(right_quantum(n, n), "M", "U", Side::both); });
}

AlgebraHandle inv_right(int n) {
  return shared_algebra("rq:" + std::to_string(n) + "[U right]",
                        [=] { return localize_matrix(right_quantum(n, n), "M", "U", Side::right); });
}

// Right inverse of M and left inverse e of its determinant.
AlgebraHandle inv_right_det_left(int n) {
  return shared_algebra("rq:" + std::to_string(n) + "[U right][e left]", [=] {
    AlgebraHandle B = localize_matrix(right_quantum(n, n), "M", "U", Side::right);
    return localize(B, {det_q(B.matrix())}, {"e"}, Side::left);
  });
}

NCPoly minor1(const NCMatrix& M, const MultiIndex& I, const MultiIndex& J, int qsign,
              const NCPoly& one) {
  return minor(M, I, J, qsign, std::optional<NCPoly>(one));
}

NCMatrix scale_left(const NCPoly& e, const NCMatrix& X) {
  return X.map([&](const NCPoly& x) { return e * x; });
}

void inv_commute_lemma(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = shared_algebra("rq(x)t:" + std::to_string(n) + "[U]", [=] {
      return localize_matrix(tensor_product(right_quantum(n, n), free_algebra({"t"})), "M", "U",
                             Side::both);
    });
    NCPoly t = A.gen("t");
    NCMatrix U = A.matrix("U");
    std::vector<NCPoly> res;
    for (auto& u : entries(U)) res.push_back(t * u - u * t);
    ev.zero_all(A, res, "element commuting with M commutes with its inverse" + tagn(n));
    ev.require_nondegenerate(A, ev.cap());
  }
}

void grass_inverse(Evidence& ev) {
  int n = int(ev.param("n"));
  AlgebraHandle A = shared_algebra("(rq(x)grass):" + std::to_string(n) + "[U]", [=] {
    return localize_matrix(tensor_product(right_quantum(n, n), q_grassmann(n, "psi")), "M", "U",
                           Side::both);
  });
  NCMatrix M = A.matrix(), U = A.matrix("U");
  auto psi = [&](int i) { return A.gen("psi" + std::to_string(i)); };
  std::vector<NCPoly> psiM;
  for (int j = 1; j <= n; ++j) {
    NCPoly s = zero_of(A);
    for (int i = 1; i <= n; ++i) s += psi(i) * M(i, j);
    psiM.push_back(s);
  }
  for (int m = 1; m <= std::min(n, 2); ++m) {
    std::vector<NCPoly> res;
    for (auto& J : all_tuples(n, m)) {
      NCPoly lhs = A.one();
      for (int k = m - 1; k >= 0; --k) lhs = lhs * psi(J[k]);
      NCPoly rhs = zero_of(A);
      for (auto& L : increasing_subsets(n, m)) {
        NCPoly p = A.one();
        for (int k = m - 1; k >= 0; --k) p = p * psiM[L[k] - 1];
        rhs += p * det_q(U.sub(L, J), -1);
      }
      res.push_back(lhs - rhs);
    }
    ev.zero_all(A, res, "Grassmann variables through the inverse m=" + std::to_string(m));
  }
  ev.require_nondegenerate(A, ev.cap());
}

void q_cauchy_binet_inverse(Evidence& ev) {
  int n = int(ev.param("n"));
  AlgebraHandle A = inv_both(n);
  NCMatrix M = A.matrix(), U = A.matrix("U");
  for (int m = 1; m <= n; ++m) {
    std::vector<NCPoly> res;
    for (auto& K : increasing_subsets(n, m))
      for (auto& J : all_tuples(n, m)) {
        NCPoly lhs = zero_of(A);
        for (auto& L : increasing_subsets(n, m)) lhs += det_q(M.sub(K, L)) * det_q(U.sub(L, J), -1);
        MultiIndex s = J;
        std::sort(s.begin(), s.end());
        RatQ rhs = s == K ? eps_q(J, -1) : RatQ();
        res.push_back(lhs - A.scalar(rhs));
      }
    ev.zero_all(A, res, "minors of M against minors of the inverse m=" + std::to_string(m));
  }
  ev.zero(A, det_q(M) * det_q(U, -1) - A.one(), "det M det_{q^-1} U = 1");
  ev.require_nondegenerate(A, ev.cap());
}

void det_left_inverse_question(Evidence& ev) {
  int n = int(ev.param("n"));
  AlgebraHandle A = inv_both(n);
  ev.zero(A, det_q(A.matrix("U"), -1) * det_q(A.matrix()) - A.one(), "det_{q^-1} U det M = 1");
}

void jacobi(Evidence& ev, int n) {
  AlgebraHandle A = inv_both(n);
  NCMatrix M = A.matrix(), U = A.matrix("U");
  NCPoly d = det_q(M), one = A.one();
  for (int m = 1; m <= n; ++m) {
    std::vector<NCPoly> res;
    for (auto& I : increasing_subsets(n, m))
      for (auto& J : all_tuples(n, m)) {
        NCPoly lhs = d * det_q(U.sub(I, J), -1);
        RatQ eps = eps_q(J, -1);
        NCPoly rhs = zero_of(A);
        if (!eps.is_zero()) {
          int e = 0;
          for (int l = 0; l < m; ++l) e += J[l] - I[l];
          MultiIndex Js = J;
          std::sort(Js.begin(), Js.end());
          rhs = (neg_pq(1, e) * eps) * minor1(M, complement(Js, n), complement(I, n), 1, one);
        }
        res.push_back(lhs - rhs);
      }
    ev.zero_all(A, res, "minors of the inverse m=" + std::to_string(m) + tagn(n));
  }
  ev.require_nondegenerate(A, ev.cap());
}

void jacobi_ratio(Evidence& ev) { jacobi(ev, int(ev.param("n"))); }

// Length-two cases of the ratio formula; lead = det M U or the adjugate.
std::vector<NCPoly> ldjlc_residuals(const NCMatrix& M, const NCMatrix& U, const NCMatrix& lead,
                                    const NCPoly& one) {
  int n = int(M.rows());
  RatQ q = RatQ::q(1);
  std::vector<NCPoly> out;
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      for (int j = 1; j <= n; ++j) out.push_back(lead(i1, j) * U(i2, j) - q * (lead(i2, j) * U(i1, j)));
      for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2) {
          NCPoly c = minor1(M, complement({j1, j2}, n), complement({i1, i2}, n), 1, one);
          int e = j1 + j2 - i1 - i2;
          out.push_back(lead(i1, j1) * U(i2, j2) - q * (lead(i2, j1) * U(i1, j2)) - neg_pq(1, e) * c);
          out.push_back(lead(i1, j2) * U(i2, j1) - q * (lead(i2, j2) * U(i1, j1)) -
                        neg_pq(1, e + 1) * c);
        }
    }
  return out;
}

void ldjlc(Evidence& ev) {
  int n = int(ev.param("n"));
  AlgebraHandle A = inv_both(n);
  NCMatrix M = A.matrix(), U = A.matrix("U");
  NCMatrix lead = scale_left(det_q(M), U);
  std::vector<NCPoly> res = ldjlc_residuals(M, U, lead, A.one());
  ev.zero_all(A, res, "determinant form" + tagn(n));
  ev.require_nondegenerate(A, ev.cap());
}

void ldjlc_adjoint(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = inv_right(n);
    NCMatrix M = A.matrix(), U = A.matrix("U");
    ev.zero_all(A, ldjlc_residuals(M, U, adjoint(M), A.one()), "adjugate form, right inverse" + tagn(n));
    ev.require_nondegenerate(A, ev.cap());
  }
}

void inverse_is_qinv_manin(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = inv_right_det_left(n);
    ev.zero_all(A, manin_relations(A.matrix("U"), -1), "right inverse is q^-1-Manin" + tagn(n));
    ev.require_nondegenerate(A, ev.cap());
  }
}

void schur(Evidence& ev) {
  AlgebraHandle A = shared_algebra("rq:2[U][e][a,d]", [] {
    AlgebraHandle B = localize_matrix(right_quantum(2, 2), "M", "U", Side::both);
    B = localize(B, {det_q(B.matrix())}, {"e"}, Side::both);
    return localize(B, {B.gen("a"), B.gen("d")}, {"ainv", "dinv"}, Side::both);
  });
  NCPoly a = A.gen("a"), b = A.gen("b"), c = A.gen("c"), d = A.gen("d");
  NCPoly ai = A.gen("ainv"), di = A.gen("dinv"), e = A.gen("e"), one = A.one();
  NCMatrix U = A.matrix("U");
  NCPoly sa = a - b * di * c, sd = d - c * ai * b, det = det_q(A.matrix());
  ev.zero(A, U(1, 1) * sa - one, "U_11 (a - b d^-1 c) = 1");
  ev.zero(A, sa * U(1, 1) - one, "(a - b d^-1 c) U_11 = 1");
  ev.zero(A, U(2, 2) * sd - one, "U_22 (d - c a^-1 b) = 1");
  ev.zero(A, sd * U(2, 2) - one, "(d - c a^-1 b) U_22 = 1");
  ev.zero(A, det - d * sa, "det = d (a - b d^-1 c)");
  ev.zero(A, det - a * sd, "det = a (d - c a^-1 b)");
  ev.zero(A, U(1, 1) - e * d, "U_11 = det^-1 d");
  ev.zero(A, U(2, 2) - e * a, "U_22 = det^-1 a");
  ev.require_nondegenerate(A, ev.cap());
}

void sylvester(Evidence& ev) {
  AlgebraHandle A = shared_algebra("rq:3[m11]", [] {
    AlgebraHandle B = right_quantum(3, 3);
    return localize(B, {B.gen("M11")}, {"m11inv"}, Side::both);
  });
  NCMatrix M = A.matrix();
  NCPoly inv = A.gen("m11inv");
  NCMatrix B(2, 2);
  for (int i = 2; i <= 3; ++i)
    for (int j = 2; j <= 3; ++j)
      B(i - 1, j - 1) = inv * (M(1, 1) * M(i, j) - RatQ::q(-1) * (M(i, 1) * M(1, j)));
  ev.zero_all(A, manin_relations(B), "Sylvester matrix is Manin");
  ev.zero(A, det_q(B) - inv * det_q(M), "det of the Sylvester matrix");
  ev.require_nondegenerate(A, ev.cap());
}

void plucker(Evidence& ev) {
  AlgebraHandle A = rq(4, 2);
  NCMatrix M = A.matrix();
  auto pi = [&](int i, int j) { return det_q(M.sub({i, j}, {1, 2})); };
  auto q = [](int e) { return RatQ::q(e); };
  NCPoly r = pi(1, 2) * pi(3, 4) + q(-4) * (pi(3, 4) * pi(1, 2)) -
             (q(-1) * (pi(1, 3) * pi(2, 4)) + q(-3) * (pi(2, 4) * pi(1, 3))) +
             q(-2) * (pi(1, 4) * pi(2, 3) + pi(2, 3) * pi(1, 4));
  ev.zero(A, r, "Plucker relation");
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      ev.exact(pi(i, j) == M(i, 1) * M(j, 2) - q(-1) * (M(j, 1) * M(i, 2)), "2x2 minor");
}

}  // namespace

void register_inverse_checks() {
  register_check({"inv_commute_lemma", "inverse", "elements commuting with M commute with its inverse",
                  {{"n", 2}, {"degree", 6}}, Status::Proved, true, inv_commute_lemma});
  register_check({"grass_inverse", "inverse", "Grassmann variables expressed through the inverse",
                  {{"n", 2}, {"degree", 8}}, Status::Proved, true, grass_inverse});
  register_check({"q_cauchy_binet_inverse", "inverse", "Cauchy-Binet formula for M and its inverse",
                  {{"n", 2}, {"degree", 8}}, Status::Proved, true, q_cauchy_binet_inverse});
  register_check({"det_left_inverse_question", "inverse",
                  "is the inverse determinant also a left inverse (open)", {{"n", 2}, {"degree", 8}},
                  Status::Inconclusive, false, det_left_inverse_question});
  register_check({"jacobi_ratio", "inverse", "Jacobi ratio theorem", {{"n", 2}, {"degree", 8}},
                  Status::Proved, true, jacobi_ratio});
  register_check({"jacobi_ratio_stretch", "inverse", "Jacobi ratio theorem for 3x3 matrices",
                  {{"n", 3}, {"degree", 6}}, Status::Proved, false, jacobi_ratio});
  register_check({"ldjlc", "inverse", "Lagrange-Desnanot-Jacobi-Lewis Carroll formula",
                  {{"n", 2}, {"degree", 8}}, Status::Proved, true, ldjlc});
  register_check({"ldjlc_adjoint", "inverse",
                  "Lagrange-Desnanot-Jacobi-Lewis Carroll formula with a right inverse",
                  {{"n", 3}, {"degree", 6}}, Status::Proved, true, ldjlc_adjoint});
  register_check({"inverse_is_qinv_manin", "inverse", "the inverse of a Manin matrix is q^-1-Manin",
                  {{"n", 3}, {"degree", 6}}, Status::Proved, true, inverse_is_qinv_manin});
  register_check({"schur", "inverse", "Schur complements of a 2x2 Manin matrix", {{"degree", 8}},
                  Status::Proved, true, schur});
  register_check({"sylvester", "inverse", "Sylvester identity for a 3x3 Manin matrix",
                  {{"degree", 8}}, Status::Proved, true, sylvester});
  register_check({"plucker", "inverse", "Plucker relation for the 2x2 minors of a 4x2 matrix",
                  {}, Status::Proved, true, plucker});
}

}  // namespace qm
