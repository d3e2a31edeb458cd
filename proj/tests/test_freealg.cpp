#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <random>

#include "qmanin/algebras.hpp"
#include "qmanin/expr.hpp"
#include "qmanin/ruleset_io.hpp"

using namespace qm;

namespace {

NCPoly random_poly(std::mt19937& rng, const Alphabet* al, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), g(0, int(al->size()) - 1), c(-3, 3), e(-2, 2), n(1, 4);
  NCPoly p(RatQ(), al);
  for (int k = n(rng); k > 0; --k) {
    Word w;
    for (int l = len(rng); l > 0; --l) w.push_back(Gen(g(rng)));
    p += NCPoly::monomial(w, RatQ(LaurentQ::monomial(e(rng), Rational(c(rng)))), al);
  }
  return p;
}

}  // namespace

TEST_SUITE("freealg") {
  TEST_CASE("parser basics") {
    AlgebraHandle A = right_quantum(2, 2);
    const Alphabet* al = A.alphabet();
    NCPoly d = parse_expr("a*d - q^-1*c*b", al);
    CHECK(d.str() == "a*d - q^-1*c*b");
    CHECK(parse_expr("a^2", al) == parse_expr("a*a", al));
    CHECK(parse_expr("-(a - b)", al) == parse_expr("b - a", al));
    CHECK(parse_expr("(q^2 - 1)/(q - 1)*a", al) == parse_expr("q*a + a", al));
    CHECK(parse_expr(" a * ( b + c ) ", al) == parse_expr("a*b + a*c", al));
    CHECK(parse_scalar("q^-3") == RatQ::q(-3));
  }

  TEST_CASE("parser errors") {
    AlgebraHandle A = right_quantum(2, 2);
    const Alphabet* al = A.alphabet();
    CHECK_THROWS_AS(parse_expr("(a+d)^2", al), ExprError);
    CHECK_THROWS_AS(parse_expr("a d", al), ExprError);
    CHECK_THROWS_AS(parse_expr("a*/b", al), ExprError);
    CHECK_THROWS_AS(parse_expr("a/b", al), ExprError);
    CHECK_THROWS_AS(parse_expr("a^-1", al), ExprError);
    CHECK_THROWS_AS(parse_expr("(a", al), ExprError);
    CHECK_THROWS_AS(parse_expr("", al), ExprError);
    try {
      parse_expr("q^3*M11", al);
      FAIL("unknown generator accepted");
    } catch (const ExprError& e) {
      CHECK(e.position == 4);
      CHECK(std::string(e.what()).find("M11") != std::string::npos);
    }
  }

  TEST_CASE("print then parse round trip (property)") {
    AlgebraHandle A = free_matrix(3, 3);
    std::mt19937 rng(17);
    for (int t = 0; t < 300; ++t) {
      NCPoly p = random_poly(rng, A.alphabet(), 4);
      CHECK(parse_expr(p.str(), A.alphabet()) == p);
    }
  }

  TEST_CASE("ring laws in the free algebra (property)") {
    AlgebraHandle A = free_matrix(2, 2);
    std::mt19937 rng(23);
    for (int t = 0; t < 100; ++t) {
      NCPoly x = random_poly(rng, A.alphabet(), 3), y = random_poly(rng, A.alphabet(), 3),
             z = random_poly(rng, A.alphabet(), 3);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x - x).is_zero());
    }
    NCPoly a = A.gen("a"), b = A.gen("b");
    CHECK(!(a * b - b * a).is_zero());
  }

  TEST_CASE("completion of the quantum plane") {
    AlgebraHandle P = quantum_affine(2);
    auto rs = P.rules(4);
    CHECK(P.stats(4).confluent);
    CHECK(rs->size() == 1);
    CHECK(rs->inter_reduced());
    NCPoly x1 = P.gen("x1"), x2 = P.gen("x2");
    // normal words x1^a x2^b or x2^b x1^a: one per exponent pair
    for (int d = 1; d <= 4; ++d) CHECK(count_normal_words(*rs, 2, d) == uint64_t(d + 1));
    CHECK(P.prove_zero(x2 * x1 * x2 - RatQ::q(1) * (x1 * x2 * x2), 4).status == Membership::Proved);
    CHECK(P.prove_zero(x2 * x1 * x2 - x1 * x2 * x2, 4).status == Membership::Inconclusive);
  }

  TEST_CASE("normal forms are irreducible and traces replay (property)") {
    AlgebraHandle A = right_quantum(2, 2);
    auto rs = A.rules(5);
    std::mt19937 rng(29);
    for (int t = 0; t < 100; ++t) {
      NCPoly p = random_poly(rng, A.alphabet(), 4);
      ReductionTrace tr;
      NCPoly nf = reduce(p, *rs, &tr);
      for (auto& [w, c] : nf.terms()) CHECK(!rs->reducible(w));
      CHECK(replay_trace(p, tr, *rs, nf));
      CHECK(reduce(nf, *rs) == nf);
    }
  }

  TEST_CASE("membership is sound for a negative control") {
    AlgebraHandle A = right_quantum(2, 2);
    NCPoly a = A.gen("a"), b = A.gen("b");
    auto r = A.prove_zero(a * b - b * a, 6);
    CHECK(r.status == Membership::Inconclusive);
    CHECK(!r.normal_form.is_zero());
  }

  TEST_CASE("rule set serialization") {
    AlgebraHandle A = right_quantum(2, 2);
    auto rs = A.rules(4);
    std::string s = serialize_ruleset(*rs, A.stats(4));
    auto j = nlohmann::json::parse(s);
    for (auto key : {"schema_version", "alphabet", "order", "completion_degree", "rules"})
      CHECK(j.contains(key));
    CHECK(j["schema_version"] == kRuleSetSchema);
    CHECK(j["completion_degree"] == 4);
    CompletionStats st;
    RuleSet back = parse_ruleset(s, A.alphabet(), &st);
    CHECK(serialize_ruleset(back, st) == s);
    CHECK(back.size() == rs->size());
  }

  TEST_CASE("serial and parallel completion agree") {
    AlgebraHandle A = right_quantum(3, 3);
    CompletionOptions o;
    o.max_degree = 5;
    o.parallel = false;
    RuleSet s = complete(A.presentation().relations, A.alphabet(), o);
    o.parallel = true;
    RuleSet p = complete(A.presentation().relations, A.alphabet(), o);
    CompletionStats st;
    CHECK(serialize_ruleset(s, st) == serialize_ruleset(p, st));
  }

  TEST_CASE("monomial cap is a resource error") {
    AlgebraHandle A = right_quantum(3, 3);
    CompletionOptions o;
    o.max_degree = 6;
    o.monomial_cap = 10;
    CHECK_THROWS_AS(complete(A.presentation().relations, A.alphabet(), o), ResourceError);
  }

  TEST_CASE("disk cache and the environment override") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qmanin_unit_cache";
    fs::remove_all(dir);
    fs::create_directories(dir);
    setenv("QMANIN_CACHE_DIR", dir.c_str(), 1);
    CHECK(effective_cache_dir() == dir.string());
    AlgebraHandle A = quantum_matrices(2);
    size_t n1 = A.rules(4)->size();
    std::string key = cache_key(A.presentation().hash(), 4) + ".json";
    CHECK(fs::exists(dir / key));
    AlgebraHandle B = quantum_matrices(2);
    CHECK(B.rules(4)->size() == n1);
    CHECK_THROWS(load_ruleset((dir / key).string(), B.alphabet(), "other", 4));
    unsetenv("QMANIN_CACHE_DIR");
    fs::remove_all(dir);
  }
}
