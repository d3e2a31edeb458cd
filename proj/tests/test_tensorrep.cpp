#include <doctest.h>

#include "qmanin/algebras.hpp"
#include "qmanin/qlinalg.hpp"
#include "qmanin/tensorrep.hpp"

using namespace qm;

namespace {

Tensor<RatQ> one(int n, int m) { return Tensor<RatQ>::identity(n, m, RatQ(1)); }

// P^q by its defining action: e_i (x) e_j -> q^{sgn(i-j)} e_j (x) e_i, built entry by entry.
Tensor<RatQ> perm_oracle(int n) {
  Tensor<RatQ> P(n, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int s = (i > j) - (i < j);
      P.set(P.index({j, i}), P.index({i, j}), RatQ::q(s));
    }
  return P;
}

}  // namespace

TEST_SUITE("tensorrep") {
  TEST_CASE("q-permutation operator") {
    for (int n = 2; n <= 4; ++n) {
      Tensor<RatQ> P = perm_q(n);
      CHECK(P * P == one(n, 2));
      bool matches = P == perm_oracle(n) || P == perm_oracle(n).map([](const RatQ& x) { return x.q_inverted(); });
      CHECK(matches);
      CHECK(P.partial_trace({1}) == Tensor<RatQ>::identity(n, 1, RatQ(1)));
    }
  }

  TEST_CASE("antisymmetrizer and symmetrizer are orthogonal idempotents") {
    for (int n = 2; n <= 3; ++n)
      for (int m = 2; m <= 3; ++m) {
        Tensor<RatQ> A = antisym_q(n, m), S = sym_q(n, m);
        CHECK(A * A == A);
        CHECK(S * S == S);
        CHECK((A * S).is_zero());
        CHECK((S * A).is_zero());
      }
    CHECK(antisym_q(2, 3).is_zero());
    CHECK(rank(antisym_q(2, 2)) == 1);
    CHECK(rank(antisym_q(3, 3)) == 1);
    CHECK(rank(antisym_q(3, 2)) == 3);
    CHECK(antisym_q(3, 3).trace(RatQ()) == RatQ(1));
    CHECK(antisym_q(2, 2).trace(RatQ()) == RatQ(1));
  }

  TEST_CASE("pi_q is a homomorphism and satisfies the braid relation") {
    int n = 2, m = 3;
    for (auto& s : permutations(m))
      for (auto& t : permutations(m)) CHECK(pi_q(n, m, compose(s, t)) == pi_q(n, m, s) * pi_q(n, m, t));
    Tensor<RatQ> P12 = embed(perm_q(n), {1, 2}, 3), P23 = embed(perm_q(n), {2, 3}, 3);
    CHECK(P12 * P23 * P12 == P23 * P12 * P23);
    CHECK(pi_q(n, m, {2, 1, 3}) == P12);
  }

  TEST_CASE("embedding") {
    Tensor<RatQ> P = perm_q(2);
    CHECK(embed(P, {1, 2}, 2) == P);
    CHECK_THROWS(embed(P, {1, 1}, 3));
    CHECK_THROWS(embed(P, {1, 4}, 3));
  }

  TEST_CASE("R-matrix") {
    RatZW z = RatZW::z();
    Tensor<RatZW> R = r_matrix<RatZW>(2, z);
    Tensor<RatZW> Ri = r_matrix<RatZW>(2, RatZW(1) / z);
    // unitarity: R_12(z) R_21(1/z) is a scalar
    Tensor<RatZW> U = R * embed(Ri, {2, 1}, 2);
    RatZW f = U.get(0, 0, RatZW());
    CHECK(!f.is_zero());
    CHECK(U == Tensor<RatZW>::identity(2, 2, f));
    Tensor<RatQ> Rq = r_matrix<RatQ>(2, RatQ::q(-2));
    CHECK(Rq == one(2, 2) - perm_q(2));
    // not 1 - P at a generic point
    CHECK(!(r_matrix<RatQ>(2, RatQ::q(3)) == one(2, 2) - perm_q(2)));
    // fusion at the wrong spectral points does not give the antisymmetrizer
    Tensor<RatQ> bad = big_r<RatQ>(2, {RatQ(1), RatQ::q(-2)});
    CHECK(!(bad == antisym_q(2, 2) * RatQ(2)));
  }

  TEST_CASE("Pyatov residuals vanish only for Manin matrices") {
    AlgebraHandle F = free_matrix(2, 2);
    auto res = pyatov_residuals(F.matrix());
    CHECK(res.size() == 4);
    for (auto& t : res) CHECK(!t.is_zero());
    AlgebraHandle A = right_quantum(2, 2);
    for (auto& t : pyatov_residuals(A.matrix()))
      for (size_t r = 0; r < t.dim(); ++r)
        for (auto& [c, v] : t.row(r)) CHECK(A.prove_zero(v, 4).status == Membership::Proved);
  }
}
