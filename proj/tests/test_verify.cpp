#include <doctest.h>

#include "qmanin/algebras.hpp"
#include "qmanin/qlinalg.hpp"
#include "qmanin/verify.hpp"

using namespace qm;

namespace {

CheckRecord record(Status s, Status expected, bool gating = true) {
  CheckRecord r;
  r.status = s;
  r.expected = expected;
  r.gating = gating;
  return r;
}

AlgebraHandle right_inverse_det_left() {
  AlgebraHandle B = localize_matrix(right_quantum(2, 2), "M", "U", Side::right);
  return localize(B, {det_q(B.matrix())}, {"e"}, Side::left);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("catalog") {
    CHECK(list_checks().size() >= 40);
    CHECK(find_check("cayley_hamilton"));
    CHECK(find_check("tensor.cayley_hamilton"));
    CHECK(!find_check("unknown"));
    CHECK_THROWS(run_check("unknown"));
    for (auto& d : list_checks()) CHECK(d.defaults.count("degree"));
  }

  TEST_CASE("glob") {
    CHECK(glob_match("lax.*", "lax.ybe"));
    CHECK(glob_match("*det*", "det_property_7"));
    CHECK(glob_match("det_property_?", "det_property_3"));
    CHECK(!glob_match("lax.*", "tensor.newton"));
  }

  TEST_CASE("run_check outcomes") {
    RunOptions o;
    o.overrides = {{"n", 2}, {"degree", 6}};
    CheckRecord ch = run_check("cayley_hamilton", o);
    CHECK(ch.status == Status::Proved);
    CHECK(ch.params.at("n") == 2);
    CheckRecord p7 = run_check("det_property_7");
    CHECK(p7.status == Status::Refuted);
    CHECK(p7.witness["kind"] == "representation");
    CHECK(p7.witness["truncation"] == 8);
    CHECK(!p7.unexpected());
  }

  TEST_CASE("kept traces replay") {
    RunOptions o;
    o.keep_traces = true;
    CheckRecord r = run_check("coaction_x", o);
    REQUIRE(r.status == Status::Proved);
    CHECK(!r.obligations.empty());
    for (auto& ob : r.obligations)
      CHECK(replay_trace(ob.residual, ob.trace, *ob.algebra.rules(ob.degree),
                         NCPoly(RatQ(), ob.algebra.alphabet())));
  }

  TEST_CASE("evidence statuses") {
    Params p{{"degree", 6}};
    AlgebraHandle A = right_quantum(2, 2);
    NCPoly a = A.gen("a"), b = A.gen("b"), c = A.gen("c");
    {
      Evidence ev(p, false);
      ev.zero(A, a * c - RatQ::q(-1) * (c * a), "column relation");
      CHECK(ev.status() == Status::Proved);
    }
    {
      // RQ(2,2) is complete, so a nonzero normal form refutes
      Evidence ev(p, false);
      ev.zero(A, a * b - b * a, "rows commute");
      CHECK(ev.status() == Status::Refuted);
      CHECK(ev.witness()["kind"] == "normal_form");
    }
    {
      Evidence ev(p, false);
      ev.exact(false, "exact");
      CHECK(ev.status() == Status::Refuted);
    }
    {
      Evidence ev(p, false);
      CHECK(ev.status() == Status::Error);
    }
    {
      Evidence ev(p, false);
      AlgebraHandle G = q_grassmann(2);
      AlgebraHandle Z = localize(G, {G.gen("psi1")}, {"u"}, Side::left);
      CHECK_THROWS(ev.require_nondegenerate(Z, 4));
    }
  }

  TEST_CASE("inverse entries: correct sign proves, wrong sign does not") {
    AlgebraHandle X = right_inverse_det_left();
    NCMatrix M = X.matrix(), U = X.matrix("U");
    NCPoly e = X.gen("e");
    Params p{{"degree", 8}};
    Evidence good(p, false), bad(p, false);
    good.zero(X, U(1, 1) - e * M(2, 2), "U11");
    good.zero(X, U(1, 2) + RatQ::q(1) * (e * M(1, 2)), "U12");
    CHECK(good.status() == Status::Proved);
    bad.zero(X, U(1, 2) - RatQ::q(1) * (e * M(1, 2)), "U12 wrong sign");
    CHECK(bad.status() != Status::Proved);
  }

  TEST_CASE("suite exit codes") {
    CHECK(suite_exit_code({record(Status::Proved, Status::Proved)}) == 0);
    CHECK(suite_exit_code({record(Status::Refuted, Status::Refuted)}) == 0);
    CHECK(suite_exit_code({record(Status::Inconclusive, Status::Proved)}) == 2);
    CHECK(suite_exit_code({record(Status::Refuted, Status::Proved)}) == 3);
    CHECK(suite_exit_code({record(Status::Error, Status::Proved)}) == 1);
    CHECK(suite_exit_code({record(Status::Refuted, Status::Proved, false)}) == 0);
    CHECK(suite_exit_code({record(Status::Inconclusive, Status::Proved),
                           record(Status::Refuted, Status::Proved)}) == 3);
  }

  TEST_CASE("reports are stable") {
    RunOptions o;
    o.stable = true;
    auto a = report_json(run_suite("elementary.*", o)).dump();
    o.jobs = 3;
    auto b = report_json(run_suite("elementary.*", o)).dump();
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    REQUIRE(j.is_array());
    for (auto key : {"check_id", "group", "citation", "params", "status", "expected", "gating",
                     "completion_degree", "elapsed", "witness", "detail"})
      CHECK(j[0].contains(key));
    CHECK(j[0]["elapsed"] == 0.0);
  }
}
