#include <doctest.h>

#include <random>

#include "qmanin/ratzw.hpp"
#include "qmanin/scalars_json.hpp"

using namespace qm;

namespace {

LaurentQ random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-4, 4), c(-5, 5), n(0, 4);
  std::vector<LaurentQ::Term> t;
  for (int k = n(rng); k > 0; --k) t.emplace_back(e(rng), Rational(c(rng)));
  return LaurentQ::from_terms(t);
}

RatQ random_ratq(std::mt19937& rng) {
  LaurentQ d = random_laurent(rng);
  if (d.is_zero()) d = LaurentQ(1);
  return RatQ(random_laurent(rng), d);
}

RatZW random_ratzw(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 2), n(1, 3);
  auto poly = [&] {
    PolyZW p;
    for (int k = n(rng); k > 0; --k) p += PolyZW::monomial({e(rng), e(rng)}, random_ratq(rng));
    return p;
  };
  PolyZW d = poly();
  if (d.is_zero()) d = PolyZW(RatQ(1));
  return RatZW(poly(), d);
}

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("laurent arithmetic") {
    LaurentQ q = LaurentQ::monomial(1), qi = LaurentQ::monomial(-1);
    CHECK(q * qi == LaurentQ(1));
    CHECK((q + qi) * (q - qi) == LaurentQ::monomial(2) - LaurentQ::monomial(-2));
    CHECK(neg_q_pow(3) == LaurentQ::monomial(3, -1));
    CHECK(neg_q_pow(-2) == LaurentQ::monomial(-2));
    CHECK((q + LaurentQ(2)).eval(Rational(3)) == 5);
    CHECK(LaurentQ::monomial(2, 3).q_inverted() == LaurentQ::monomial(-2, 3));
  }

  TEST_CASE("ratq canonical form") {
    RatQ q = RatQ::q();
    RatQ x = (q * q - RatQ(1)) / (q - RatQ(1));
    CHECK(x == q + RatQ(1));
    CHECK(x.is_laurent());
    CHECK((RatQ(1) / q) == RatQ::q(-1));
    CHECK(RatQ::q(-2).subs(Rational(2)) == Rational(1, 4));
    CHECK_THROWS(RatQ(RatQ(1) / (q - RatQ(1))).subs(Rational(1)));
  }

  TEST_CASE("ratq field laws (property)") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
      RatQ a = random_ratq(rng), b = random_ratq(rng), c = random_ratq(rng);
      CHECK((a + b) == (b + a));
      CHECK((a * b) == (b * a));
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK(((a + b) + c) == (a + (b + c)));
      if (!b.is_zero()) CHECK(((a / b) * b) == a);
      CHECK(a.q_inverted().q_inverted() == a);
    }
  }

  TEST_CASE("ratzw field laws and substitutions (property)") {
    std::mt19937 rng(5);
    for (int t = 0; t < 60; ++t) {
      RatZW a = random_ratzw(rng), b = random_ratzw(rng);
      CHECK((a * b) == (b * a));
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(a.swapped().swapped() == a);
      CHECK(a.shifted(Spectral::z, 1).shifted(Spectral::z, -1) == a);
    }
    RatZW z = RatZW::z(), w = RatZW::w();
    CHECK(((z * z - w * w) / (z - w)) == z + w);
    CHECK((z / w).subs(Spectral::w, RatZW(RatQ(2))) == z * RatQ(Rational(1, 2)));
    CHECK_THROWS((RatZW(1) / (z - w)).subs(Spectral::z, w));
  }

  TEST_CASE("json round trip (property)") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
      RatQ a = random_ratq(rng);
      CHECK(ratq_from_json(to_json(a)) == a);
      LaurentQ l = random_laurent(rng);
      CHECK(laurent_from_json(to_json(l)) == l);
    }
    for (int t = 0; t < 30; ++t) {
      RatZW x = random_ratzw(rng);
      CHECK(ratzw_from_json(to_json(x)) == x);
    }
    auto j = to_json(LaurentQ::monomial(-1, Rational(-3, 4)));
    CHECK(j.dump() == R"([[-1,"-3","4"]])");
    CHECK(to_json(RatQ::q(2)).contains("num"));
  }
}
