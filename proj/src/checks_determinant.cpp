#include "check_util.hpp"
#include "qmanin/expr.hpp"
#include "qmanin/quantum_plane.hpp"

namespace qm {
using namespace checks;

namespace {

std::string tagn(int n) { return " n=" + std::to_string(n); }

MultiIndex iota(int n) {
  MultiIndex r;
  for (int i = 1; i <= n; ++i) r.push_back(i);
  return r;
}

NCMatrix with_column(const NCMatrix& M, int s, const std::vector<NCPoly>& col) {
  NCMatrix R = M;
  for (size_t i = 1; i <= M.rows(); ++i) R(i, s) = col[i - 1];
  return R;
}

std::vector<NCPoly> column(const NCMatrix& M, int s) {
  std::vector<NCPoly> c;
  for (size_t i = 1; i <= M.rows(); ++i) c.push_back(M(i, s));
  return c;
}

NCMatrix with_row(const NCMatrix& M, int r, const std::vector<NCPoly>& row) {
  NCMatrix R = M;
  for (size_t j = 1; j <= M.cols(); ++j) R(r, j) = row[j - 1];
  return R;
}

std::vector<NCPoly> row(const NCMatrix& M, int r) {
  std::vector<NCPoly> c;
  for (size_t j = 1; j <= M.cols(); ++j) c.push_back(M(r, j));
  return c;
}

std::vector<NCPoly> add(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b, const RatQ& c) {
  std::vector<NCPoly> r;
  for (size_t k = 0; k < a.size(); ++k) r.push_back(a[k] + c * b[k]);
  return r;
}

void det_fixtures(Evidence& ev) {
  AlgebraHandle A = rq(2, 2);
  ev.exact(det_q(A.matrix()) == parse_expr("a*d - q^-1*c*b", A.alphabet()), "2x2 fixture");
  AlgebraHandle F = freemat(3, 3);
  NCPoly lit = parse_expr(
      "M11*M22*M33 - q^-1*M11*M32*M23 - q^-1*M21*M12*M33 + q^-2*M21*M32*M13"
      " + q^-2*M31*M12*M23 - q^-3*M31*M22*M13",
      F.alphabet());
  NCMatrix M = F.matrix();
  ev.exact(det_q(M) == lit, "3x3 fixture");
  ev.exact(det_q(M) == parse_expr(det_q(M).str(), F.alphabet()), "3x3 print and parse");
  for (int n = 2; n <= 4; ++n) {
    NCMatrix X = freemat(n, n).matrix();
    ev.exact(det_q(X) == column_expand(X, 1, ExpandForm::left), "first column expansion" + tagn(n));
    ev.exact(det_q(X) == column_expand(X, n, ExpandForm::right), "last column expansion" + tagn(n));
  }
}

void grassmann_det(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 1; n <= top; ++n)
    for (int m = 1; m <= top; ++m) {
      AlgebraHandle A = shared_algebra("rq(x)grass:" + dims(n, m), [=] {
        return tensor_product(right_quantum(n, m), q_grassmann(n, "psi"));
      });
      AlgebraHandle P = shared_algebra("grass*free:" + dims(n, m), [=] {
        return tensor_product(q_grassmann(n, "psi"), free_matrix(n, m), false);
      });
      for (const AlgebraHandle* X : {&A, &P}) {
        bool commuting = X == &A;
        NCMatrix M = X->matrix();
        auto psi = [&](int i) { return X->gen("psi" + std::to_string(i)); };
        for (int k = 1; k <= std::min(3, m + 1); ++k) {
          std::vector<NCPoly> res;
          for (auto& J : all_tuples(m, k)) {
            NCPoly lhs = X->one(), rhs = zero_of(*X);
            if (commuting) {
              // psi^M_{j1} ... psi^M_{jk}
              for (int j : J) {
                NCPoly s = zero_of(*X);
                for (int i = 1; i <= n; ++i) s += psi(i) * M(i, j);
                lhs = lhs * s;
              }
            } else {
              lhs = zero_of(*X);
              for (auto& I : all_tuples(n, k)) {
                NCPoly t = X->one();
                for (int i : I) t = t * psi(i);
                for (int p = 0; p < k; ++p) t = t * M(I[p], J[p]);
                lhs += t;
              }
            }
            for (auto& L : increasing_subsets(n, k)) {
              NCPoly pl = X->one();
              for (int l : L) pl = pl * psi(l);
              rhs += commuting ? det_q(M.sub(L, J)) * pl : pl * det_q(M.sub(L, J));
            }
            res.push_back(lhs - rhs);
          }
          ev.zero_all(*X, res,
                      std::string(commuting ? "grassmann minors " : "free product minors ") +
                          dims(n, m) + " k=" + std::to_string(k));
        }
      }
    }
}

void det_property_1(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 1; n <= top; ++n) {
    AlgebraHandle P = shared_algebra("free*free:" + std::to_string(n), [=] {
      return tensor_product(free_matrix(n, n, "M"), free_matrix(n, n, "N"), false);
    });
    NCMatrix M = P.matrix("M"), N = P.matrix("N");
    NCPoly d = det_q(M);
    for (int s = 1; s <= n; ++s) {
      ev.exact(det_q(with_column(M, s, add(column(M, s), column(N, s), RatQ::q(2)))) ==
                   d + RatQ::q(2) * det_q(with_column(M, s, column(N, s))),
               "column linearity s=" + std::to_string(s) + tagn(n));
      ev.exact(det_q(with_row(M, s, add(row(M, s), row(N, s), RatQ(-3)))) ==
                   d + RatQ(-3) * det_q(with_row(M, s, row(N, s))),
               "row linearity r=" + std::to_string(s) + tagn(n));
    }
  }
}

void det_property_2(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n)
    for (const AlgebraHandle& A : {rq(n, n), cross_algebra(n)}) {
      NCMatrix M = A.matrix();
      NCPoly d = det_q(M);
      std::vector<NCPoly> res;
      for (auto& s : permutations(n)) res.push_back(det_q(M.sub(iota(n), s)) - eps_q(s) * d);
      ev.zero_all(A, res, "column permutation in " + A.name());
    }
}

void det_property_3(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = rq(n, n);
    NCMatrix M = A.matrix();
    NCPoly d = det_q(M);
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s) {
        if (r == s) continue;
        std::string lab = " r=" + std::to_string(r) + " s=" + std::to_string(s) + tagn(n);
        ev.zero(A, det_q(with_column(M, s, column(M, r))), "coincident columns" + lab);
        ev.zero(A, det_q(with_column(M, s, add(column(M, s), column(M, r), RatQ::q(1)))) - d,
                "column substitution" + lab);
        AlgebraHandle C = cross_algebra(n, {r});
        ev.zero(C, det_q(with_column(C.matrix(), s, column(C.matrix(), r))),
                "coincident q-commuting column under cross relations" + lab);
      }
  }
}

void det_property_4(Evidence& ev) {
  int top = int(ev.param("n"));
  struct Shape {
    int n, k, m, max_minor;
  };
  std::vector<Shape> shapes{{2, 2, 2, 2}, {2, 3, 2, 2}, {2, 1, 2, 2}, {3, 2, 3, 3}};
  if (top >= 3) shapes.push_back({3, 3, 3, 3});
  for (auto sh : shapes) {
    if (sh.n > top) continue;
    AlgebraHandle A = shared_algebra("rq(x)free:" + dims(sh.n, sh.k) + "," + dims(sh.k, sh.m), [=] {
      return tensor_product(right_quantum(sh.n, sh.k, "M"), free_matrix(sh.k, sh.m, "N"));
    });
    NCMatrix M = A.matrix("M"), N = A.matrix("N"), MN = M * N;
    std::optional<NCPoly> one(A.one());
    std::vector<NCPoly> res;
    for (int r = 1; r <= std::min({sh.n, sh.m, sh.max_minor}); ++r) {
      // at n = 3 only the full determinant beyond size 2
      if (sh.n == 3 && r == 3 && !(sh.k == 3 && sh.m == 3)) continue;
      for (auto& I : increasing_subsets(sh.n, r))
        for (auto& J : increasing_subsets(sh.m, r)) {
          NCPoly rhs = zero_of(A);
          for (auto& L : increasing_subsets(sh.k, r)) rhs += minor(M, I, L, 1, one) * minor(N, L, J, 1, one);
          res.push_back(minor(MN, I, J, 1, one) - rhs);
        }
    }
    ev.zero_all(A, res, "Cauchy-Binet " + dims(sh.n, sh.k) + "*" + dims(sh.k, sh.m));
  }
}

void det_property_5(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    NCMatrix X = freemat(n, n).matrix();
    ev.exact(det_q(X) == column_expand(X, 1, ExpandForm::left), "first column" + tagn(n));
    ev.exact(det_q(X) == column_expand(X, n, ExpandForm::right), "last column" + tagn(n));
    AlgebraHandle C = cross_algebra(n);
    NCMatrix M = C.matrix();
    NCPoly d = det_q(M);
    for (int s = 1; s <= n; ++s) {
      ev.zero(C, d - column_expand(M, s, ExpandForm::left), "left expansion s=" + std::to_string(s) + tagn(n));
      ev.zero(C, d - column_expand(M, s, ExpandForm::right), "right expansion s=" + std::to_string(s) + tagn(n));
    }
  }
}

void det_property_6(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    NCMatrix X = freemat(n, n).matrix();
    for (int m = 1; m < n; ++m) {
      MultiIndex I1, I2;
      for (int i = 1; i <= n; ++i) (i <= m ? I1 : I2).push_back(i);
      ev.exact(det_q(X) == laplace2(X, I1, I2), "contiguous blocks m=" + std::to_string(m) + tagn(n));
    }
    AlgebraHandle A = rq(n, n);
    NCMatrix M = A.matrix();
    NCPoly d = det_q(M);
    for (int m = 1; m < n; ++m)
      for (auto& I1 : increasing_subsets(n, m)) {
        MultiIndex I2 = complement(I1, n);
        ev.zero(A, laplace2(M, I1, I2) - eps_q(concat(I1, I2)) * d, "two blocks " + show(I1) + tagn(n));
      }
    // three blocks, all assignments of columns
    if (n >= 3)
      for (auto& p : permutations(n)) {
        std::vector<MultiIndex> blocks{{p[0]}, {}, {}};
        for (int k = 1; k < n; ++k) (k == 1 ? blocks[1] : blocks[2]).push_back(p[k]);
        std::sort(blocks[2].begin(), blocks[2].end());
        MultiIndex all;
        for (auto& b : blocks) all = concat(all, b);
        ev.zero(A, laplace(M, blocks) - eps_q(all) * d, "three blocks " + show(p) + tagn(n));
      }
  }
}

void det_property_7(Evidence& ev) {
  int n = int(ev.param("n"));
  AlgebraHandle A = rq(n, n);
  NCMatrix M = A.matrix();
  NCPoly com = det_q(M) * trace(M) - trace(M) * det_q(M);
  int d = complete_degree(A, 2, ev.cap());
  nlohmann::json nf = nullptr;
  if (d >= 0) nf = normal_form(A, com, d).str();
  if (n == 2) {
    QuantumPlaneRep rep(int(ev.param("sites")));
    std::vector<OpMatrix> ops = quantum_plane_manin(rep);
    bool manin = true;
    for (auto& r : manin_relations(M))
      manin = manin && !find_witness(eval_in_rep(r, rep, ops), rep);
    ev.exact(manin, "difference operators satisfy the Manin relations");
    RepValue v = eval_in_rep(com, rep, ops);
    if (auto w = find_witness(v, rep)) {
      ev.refute({{"kind", "representation"},
                 {"representation", "quantum plane"},
                 {"truncation", rep.truncation()},
                 {"entry", w->describe(rep)},
                 {"value", w->value.str()},
                 {"normal_form", nf}},
                "[det, tr] acts nonzero on the quantum plane");
      return;
    }
    ev.note("no witness on the truncated quantum plane");
  }
  if (d >= 0 && !nf.get<std::string>().empty() && nf.get<std::string>() != "0")
    ev.refute({{"kind", "normal_form"}, {"completion_degree", d}, {"normal_form", nf}},
              "[det, tr] has a nonzero normal form in a complete system");
  else
    ev.zero(A, com, "[det, tr]");
}

void cramer(Evidence& ev) {
  int top = int(ev.param("n"));
  for (int n = 2; n <= top; ++n) {
    AlgebraHandle A = rq(n, n);
    NCMatrix M = A.matrix();
    NCPoly d = det_q(M);
    NCMatrix I = identity_like(M), D = I.map([&](const NCPoly& x) { return x * d; });
    ev.zero_all(A, entries(adjoint(M) * M - D), "adjugate times M" + tagn(n));
    AlgebraHandle L = shared_algebra("rq:" + std::to_string(n) + "[det left]", [=] {
      AlgebraHandle B = right_quantum(n, n);
      return localize(B, {det_q(B.matrix())}, {"e"}, Side::left);
    });
    NCMatrix X = L.matrix();
    NCPoly e = L.gen("e");
    NCMatrix U = adjoint(X).map([&](const NCPoly& x) { return e * x; });
    ev.zero_all(L, entries(U * X - identity_like(X)), "left inverse from adjugate" + tagn(n));
    ev.require_nondegenerate(L, ev.cap());
  }
}

AlgebraHandle rq2_loc(const std::string& tag, bool with_inverse, const std::vector<std::string>& els) {
  return shared_algebra("rq2:" + tag, [=] {
    AlgebraHandle B = right_quantum(2, 2);
    if (with_inverse) B = localize_matrix(B, "M", "U", Side::both);
    std::vector<NCPoly> xs;
    std::vector<std::string> names;
    for (auto& g : els) {
      xs.push_back(B.gen(g));
      names.push_back(g + "inv");
    }
    return localize(B, xs, names, Side::both);
  });
}

void quasidet(Evidence& ev) {
  AlgebraHandle A = rq2_loc("U,ad", true, {"a", "d"});
  AlgebraHandle B = rq2_loc("U,bc", true, {"b", "c"});
  for (const AlgebraHandle* X : {&A, &B}) {
    NCMatrix M = X->matrix(), U = X->matrix("U");
    NCPoly d = det_q(M);
    std::map<std::string, NCPoly> inv;
    for (auto& g : {"a", "b", "c", "d"})
      if (X->alphabet()->find(std::string(g) + "inv") >= 0) inv[g] = X->gen(std::string(g) + "inv");
    // |M|_rs = (-q)^{s-r} (det M\r\s)^{-1} det M; at n = 2 the minor is one entry
    const char* names[2][2] = {{"d", "c"}, {"b", "a"}};  // entry of M\r\s
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; s <= 2; ++s) {
        std::string g = names[r - 1][s - 1];
        if (!inv.count(g)) continue;
        NCPoly qd = neg_pq(1, s - r) * (inv[g] * d);
        std::string lab = " r=" + std::to_string(r) + " s=" + std::to_string(s);
        ev.zero(*X, U(s, r) * qd - X->one(), "U_sr |M|_rs" + lab);
        ev.zero(*X, qd * U(s, r) - X->one(), "|M|_rs U_sr" + lab);
      }
    if (inv.count("a")) {
      ev.zero(*X, d - X->gen("d") * (neg_pq(1, 0) * (inv["d"] * d)), "det = d |M|_11");
      ev.zero(*X, d - X->gen("a") * (inv["a"] * d), "det = a |M|_22");
    }
    ev.require_nondegenerate(*X, ev.cap());
  }
}

void gauss(Evidence& ev) {
  AlgebraHandle A = rq2_loc("ad", false, {"a", "d"});
  NCPoly a = A.gen("a"), b = A.gen("b"), c = A.gen("c"), d = A.gen("d");
  NCPoly ai = A.gen("ainv"), di = A.gen("dinv"), det = det_q(A.matrix());
  ev.zero(A, det - d * (a - b * di * c), "det = d (a - b d^-1 c)");
  ev.zero(A, det - a * (d - c * ai * b), "det = a (d - c a^-1 b)");
  ev.require_nondegenerate(A, ev.cap());
}

}  // namespace

void register_determinant_checks() {
  register_check({"det_fixtures", "determinant", "column determinant of 2x2 and 3x3 matrices",
                  {}, Status::Proved, true, det_fixtures});
  register_check({"grassmann_det", "determinant", "minors as Grassmann coaction coefficients",
                  {{"n", 3}, {"degree", 6}}, Status::Proved, true, grassmann_det});
  register_check({"det_property_1", "determinant", "linearity of the determinant",
                  {{"n", 3}}, Status::Proved, true, det_property_1});
  register_check({"det_property_2", "determinant", "determinant under column permutation",
                  {{"n", 3}}, Status::Proved, true, det_property_2});
  register_check({"det_property_3", "determinant", "coincident columns and column substitution",
                  {{"n", 3}}, Status::Proved, true, det_property_3});
  register_check({"det_property_4", "determinant", "Cauchy-Binet formula",
                  {{"n", 3}, {"degree", 6}}, Status::Proved, true, det_property_4});
  register_check({"det_property_5", "determinant", "column expansion of the determinant",
                  {{"n", 3}}, Status::Proved, true, det_property_5});
  register_check({"det_property_6", "determinant", "Laplace expansion", {{"n", 3}},
                  Status::Proved, true, det_property_6});
  register_check({"det_property_7", "determinant", "determinant does not commute with the trace",
                  {{"n", 2}, {"sites", 8}}, Status::Refuted, true, det_property_7});
  register_check({"cramer", "determinant", "Cramer rule and left inverse", {{"n", 3}},
                  Status::Proved, true, cramer});
  register_check({"quasidet", "determinant", "quasideterminants of a 2x2 Manin matrix",
                  {{"degree", 6}}, Status::Proved, true, quasidet});
  register_check({"gauss", "determinant", "Gauss decomposition of a 2x2 determinant",
                  {{"degree", 6}}, Status::Proved, true, gauss});
}

}  // namespace qm
