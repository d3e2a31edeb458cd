#include <doctest.h>

#include <random>

#include "qmanin/algebras.hpp"
#include "qmanin/expr.hpp"
#include "qmanin/qlinalg.hpp"
#include "qmanin/verify.hpp"

using namespace qm;

namespace {

bool reduces_to_zero(const AlgebraHandle& A, const NCPoly& p, int degree) {
  return A.prove_zero(p, degree).status == Membership::Proved;
}

}  // namespace

TEST_SUITE("qlinalg") {
  TEST_CASE("permutation bookkeeping") {
    CHECK(permutations(3).size() == 6);
    CHECK(permutations(4).size() == 24);
    CHECK(inversions({3, 2, 1}) == 3);
    CHECK(inversions({2, 1, 3}) == 1);
    CHECK(increasing_subsets(4, 2).size() == 6);
    CHECK(complement({2}, 4) == MultiIndex{1, 3, 4});
    CHECK(has_repeats({1, 2, 1}));
    CHECK(!has_repeats({1, 2, 3}));
    CHECK(all_tuples(3, 2).size() == 9);
  }

  TEST_CASE("determinant fixtures, literal oracle") {
    AlgebraHandle F = free_matrix(2, 2);
    CHECK(det_q(F.matrix()) == parse_expr("a*d - q^-1*c*b", F.alphabet()));
    CHECK(det_q(F.matrix(), -1) == parse_expr("a*d - q*c*b", F.alphabet()));
    AlgebraHandle G = free_matrix(3, 3);
    NCPoly lit = parse_expr(
        "M11*M22*M33 - q^-1*M11*M32*M23 - q^-1*M21*M12*M33 + q^-2*M21*M32*M13"
        " + q^-2*M31*M12*M23 - q^-3*M31*M22*M13",
        G.alphabet());
    CHECK(det_q(G.matrix()) == lit);
  }

  TEST_CASE("expansions agree with the determinant in RQ(3,3)") {
    AlgebraHandle A = right_quantum(3, 3);
    NCMatrix M = A.matrix();
    NCPoly d = det_q(M);
    CHECK(column_expand(M, 1, ExpandForm::left) == d);
    CHECK(reduces_to_zero(A, column_expand(M, 2, ExpandForm::right) - d, 5));
    CHECK(reduces_to_zero(A, laplace2(M, {1}, {2, 3}) - d, 5));
    CHECK(reduces_to_zero(A, laplace(M, {{1}, {2}, {3}}) - d, 5));
  }

  TEST_CASE("adjoint is a left inverse up to the determinant in RQ(2,2)") {
    AlgebraHandle A = right_quantum(2, 2);
    NCMatrix M = A.matrix();
    NCMatrix P = adjoint(M) * M;
    NCPoly d = det_q(M);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        CHECK(reduces_to_zero(A, P(i, j) - (i == j ? d : A.scalar(RatQ())), 4));
  }

  TEST_CASE("a free matrix is not Manin (negative control)") {
    AlgebraHandle F = free_matrix(2, 2);
    auto rels = manin_relations(F.matrix());
    CHECK(rels.size() == 3);
    for (auto& r : rels) CHECK(!r.is_zero());
    CHECK(span_rank(rels) == 3);
    AlgebraHandle A = right_quantum(2, 2);
    auto wrong = manin_relations(A.matrix(), -1);
    bool all = true;
    for (auto& r : wrong) all = all && reduces_to_zero(A, r, 6);
    CHECK(!all);
  }

  TEST_CASE("q-powers") {
    AlgebraHandle A = right_quantum(2, 2);
    NCMatrix M = A.matrix();
    CHECK(q_power(M, 1) == M);
    NCMatrix M2 = q_power(M, 2);
    AlgebraHandle F = free_matrix(2, 2);
    // first entry of the q-square: a*a + q*b*c
    CHECK(M2(1, 1) == parse_expr("a*a + q*b*c", A.alphabet()));
    CHECK(M2(2, 1) == parse_expr("q^-1*c*a + d*c", A.alphabet()));
    auto e = char_q(M);
    CHECK(e.size() == 3);
    CHECK(e[1] == parse_expr("a + d", A.alphabet()));
  }

  TEST_CASE("q = 1 specialization on numeric matrices (property)") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> v(-6, 6);
    for (int t = 0; t < 40; ++t) {
      Matrix<RatQ> M(2, 2);
      for (auto* x : {&M(1, 1), &M(1, 2), &M(2, 1), &M(2, 2)}) *x = RatQ(v(rng));
      Rational ad = M(1, 1).subs(Rational(1)) * M(2, 2).subs(Rational(1));
      Rational bc = M(1, 2).subs(Rational(1)) * M(2, 1).subs(Rational(1));
      CHECK(det_q(M).subs(Rational(1)) == ad - bc);
      Matrix<RatQ> P = q_power(M, 3), Q = M * M * M;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK(P(i, j).subs(Rational(1)) == Q(i, j).subs(Rational(1)));
    }
  }

  TEST_CASE("flip reverses rows and columns") {
    AlgebraHandle F = free_matrix(2, 2);
    NCMatrix M = F.matrix(), G = flip(M);
    CHECK(G(1, 1) == M(2, 2));
    CHECK(G(1, 2) == M(2, 1));
    CHECK(flip(G) == M);
  }
}
