#include <doctest.h>

#include "qmanin/algebras.hpp"
#include "qmanin/expr.hpp"
#include "qmanin/qlinalg.hpp"
#include "qmanin/spec_io.hpp"

using namespace qm;
using nlohmann::json;

TEST_SUITE("algebras") {
  TEST_CASE("generator naming") {
    CHECK(right_quantum(2, 2).alphabet()->names() == std::vector<std::string>{"a", "b", "c", "d"});
    auto names3 = right_quantum(3, 3).alphabet()->names();
    CHECK(names3.front() == "M11");
    CHECK(names3.back() == "M33");
    CHECK(right_quantum(2, 2, "N").alphabet()->find("N12") >= 0);
    CHECK(q_grassmann(2).alphabet()->find("psi1") >= 0);
  }

  TEST_CASE("right quantum relations") {
    AlgebraHandle A = right_quantum(2, 2);
    NCMatrix M = A.matrix();
    for (auto& r : manin_relations(M)) CHECK(A.prove_zero(r, 4).status == Membership::Proved);
    // rows need not q-commute
    NCPoly a = A.gen("a"), b = A.gen("b");
    CHECK(A.prove_zero(a * b - RatQ::q(-1) * (b * a), 6).status == Membership::Inconclusive);
    CHECK(A.stats(4).confluent);
  }

  TEST_CASE("tensor products commute across factors") {
    AlgebraHandle T = tensor_product(right_quantum(2, 2), q_grassmann(2));
    NCPoly a = T.gen("a"), psi = T.gen("psi1");
    CHECK(T.prove_zero(a * psi - psi * a, 4).status == Membership::Proved);
    AlgebraHandle F = tensor_product(right_quantum(2, 2), q_grassmann(2), false);
    CHECK(F.prove_zero(F.gen("a") * F.gen("psi1") - F.gen("psi1") * F.gen("a"), 4).status ==
          Membership::Inconclusive);
    AlgebraHandle S = tensor_product(right_quantum(2, 2), right_quantum(2, 2));
    CHECK(S.has_grid("M"));
    CHECK(S.has_grid("M_2"));
  }

  TEST_CASE("localization adjoins inverses without collapse") {
    AlgebraHandle A = right_quantum(2, 2);
    NCPoly d = det_q(A.matrix());
    AlgebraHandle L = localize(A, {d}, {"e"});
    CHECK(!L.collapsed(6));
    NCPoly e = L.gen("e"), dl = transport(d, L);
    CHECK(L.prove_zero(e * dl - L.one(), 4).status == Membership::Proved);
    CHECK(L.prove_zero(dl * e - L.one(), 4).status == Membership::Proved);
    AlgebraHandle R = localize_matrix(A, "M", "U", Side::right);
    NCMatrix MU = R.matrix() * R.matrix("U");
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        CHECK(R.prove_zero(MU(i, j) - (i == j ? R.one() : R.scalar(RatQ())), 4).status ==
              Membership::Proved);
  }

  TEST_CASE("inverting a nilpotent collapses (negative control)") {
    AlgebraHandle G = q_grassmann(2);
    CHECK_THROWS(localize(G, {G.scalar(RatQ())}, {"z"}, Side::left));
    AlgebraHandle Z = localize(G, {G.gen("psi1")}, {"u"}, Side::left);
    CHECK(Z.collapsed(4));
    CHECK(!G.collapsed(4));
  }

  TEST_CASE("algebra spec files") {
    AlgebraHandle A = algebra_from_json(json::parse(R"({"preset": "rq", "params": {"n": 2, "m": 3}})"));
    CHECK(A.matrix().cols() == 3);
    AlgebraHandle C = algebra_from_json(json::parse(
        R"({"preset": "custom", "params": {"generators": ["x", "y"]}, "relations": ["y*x - q*x*y"]})"));
    NCPoly x = C.gen("x"), y = C.gen("y");
    CHECK(C.prove_zero(y * x * x - RatQ::q(2) * (x * x * y), 4).status == Membership::Proved);
    AlgebraHandle T = algebra_from_json(json::parse(
        R"({"preset": "tensor", "params": {"factors": [{"preset": "rq", "params": {"n": 2}},
            {"preset": "affine", "params": {"m": 2}}]}})"));
    CHECK(T.alphabet()->find("x2") >= 0);
    AlgebraHandle L = algebra_from_json(json::parse(
        R"({"preset": "localize", "params": {"base": {"preset": "rq", "params": {"n": 2}},
            "elements": ["a*d - q^-1*c*b"], "names": ["e"], "side": "left"}})"));
    CHECK(L.alphabet()->find("e") >= 0);
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"preset": "nope"})")), SpecError);
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"preset": "rq", "params": {}})")), SpecError);
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"preset": "rq", "params": {"n": 0}})")), SpecError);
    CHECK_THROWS_AS(algebra_from_json(json::parse(
                        R"({"preset": "rq", "params": {"n": 2}, "relations": ["a*z"]})")),
                    ExprError);
  }

  TEST_CASE("matrix files") {
    auto mf = matrix_from_json(json::parse(
        R"({"algebra": {"preset": "rq", "params": {"n": 2}}, "rows": 2, "cols": 2,
            "entries": [["a", "b"], ["c", "d"]]})"));
    CHECK(det_q(mf.matrix).str() == "a*d - q^-1*c*b");
    CHECK_THROWS_AS(matrix_from_json(json::parse(
                        R"({"algebra": "rq", "rows": 2, "cols": 2, "entries": [["a", "b"]]})")),
                    SpecError);
    auto free = matrix_from_json(json::parse(R"({"algebra": "free", "entries": [["a", "b"], ["c", "d"]]})"));
    CHECK(free.matrix.rows() == 2);
  }
}
