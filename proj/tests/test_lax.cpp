#include <doctest.h>

#include "qmanin/lax.hpp"
#include "qmanin/qlinalg.hpp"

using namespace qm;

TEST_SUITE("lax") {
  TEST_CASE("shift rule of q-difference operators") {
    RatZW z = RatZW::z();
    VOp f = VOp::identity(2, 1, z), g = VOp::identity(2, 1, z * z + RatZW(1));
    QDiffOp F(f, 1), G(g, 0), S(VOp::identity(2, 1, RatZW(1)), 1);
    // (f sigma)(g) = f g(q^2 z) sigma
    CHECK(F * G == QDiffOp(f * shift_op(g, 1), 1));
    CHECK((F * G) * S == F * (G * S));
    QDiffOp Si(VOp::identity(2, 1, RatZW(1)), -1);
    CHECK(S * Si == QDiffOp::identity(2, 1));
    CHECK(!(F * G == G * F));
  }

  TEST_CASE("L-operator construction") {
    CHECK_THROWS_AS(LaxMatrix(2, {}), LaxError);
    CHECK_THROWS_AS(LaxMatrix(2, {RatQ()}), LaxError);
    LaxMatrix L(2, {RatQ(1)});
    CHECK(rll_residual(L).is_zero());
    LaxMatrix L2(2, {RatQ(1), RatQ::q(1)});
    CHECK(rll_residual(L2).is_zero());
    LaxMatrix L3(3, {RatQ(Rational(2, 3))});
    CHECK(rll_residual(L3).is_zero());
    CHECK(i_k(L2, 1) == t_k(L2, 1));
  }

  TEST_CASE("2x2 quantum determinant by its defining sum") {
    LaxMatrix L(2, {RatQ(1), RatQ::q(1)});
    VOp expect = L.entry(1, 1) * L.entry(2, 2, 1) - L.entry(2, 1) * L.entry(1, 2, 1) * RatQ::q(-1);
    CHECK(qdet_lax(L) == expect);
    // quantum determinant is central: commutes with every entry
    VOp d = qdet_lax(L);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) CHECK(d * L.entry(i, j) == L.entry(i, j) * d);
  }

  TEST_CASE("negative controls") {
    LaxMatrix L(2, {RatQ(1)});
    // sigma^-1 instead of sigma breaks the Manin property
    Matrix<QDiffOp> M = manin_from_lax(L);
    Matrix<QDiffOp> W = M.map([](const QDiffOp& x) {
      QDiffOp r(x.space_dim(), x.space_factors());
      for (auto& [k, f] : x.terms()) r = r + QDiffOp(f, -k);
      return r;
    });
    bool all = true;
    for (auto& r : manin_relations(W)) all = all && r.is_zero();
    CHECK(!all);
    // the quantum determinant is not a plain product of diagonal entries
    CHECK(!(qdet_lax(L) == L.entry(1, 1) * L.entry(2, 2, 1)));
    // single entries at different points do not commute
    LaxMatrix L2(2, {RatQ(1), RatQ::q(1)});
    CHECK(!commutator_zw(L2.entry(1, 1), L2.entry(1, 2)).is_zero());
    CHECK(!commutator_zw(t_k(L2, 1), L2.entry(1, 2)).is_zero());
  }
}
