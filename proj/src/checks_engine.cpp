#include <random>

#include "check_util.hpp"
#include "qmanin/ruleset_io.hpp"

namespace qm {
using namespace checks;

namespace {

std::string serialized(const AlgebraHandle& A, int degree, bool parallel) {
  CompletionOptions o;
  o.max_degree = degree;
  o.parallel = parallel;
  CompletionStats st;
  const Presentation& p = A.presentation();
  RuleSet rs = complete(p.relations, A.alphabet(), o, p.hash(), &st);
  return serialize_ruleset(rs, st);
}

void completion_determinism(Evidence& ev) {
  int cap = ev.cap();
  std::vector<AlgebraHandle> algebras{
      rq(2, 2), rq(3, 3), quantum_matrices(2),
      localize_matrix(right_quantum(2, 2), "M", "U", Side::right)};
  for (auto& A : algebras) {
    std::string a = serialized(A, cap, true), b = serialized(A, cap, true),
                s = serialized(A, cap, false);
    std::string tag = " " + A.name() + " degree " + std::to_string(cap);
    ev.exact(a == b, "repeated completion is byte-identical" + tag);
    ev.exact(a == s, "serial and parallel completion agree" + tag);
    CompletionStats st;
    RuleSet back = parse_ruleset(a, A.alphabet(), &st);
    ev.exact(serialize_ruleset(back, st) == a, "serialization round-trips" + tag);
  }
}

// Dimension of the ideal in degree d: span of u r v over all words u, v.
size_t ideal_dimension(const AlgebraHandle& A, int d) {
  const Alphabet* al = A.alphabet();
  std::vector<NCPoly> span;
  for (auto& r : A.presentation().relations) {
    int rest = d - int(r.degree());
    if (rest < 0) continue;
    for (int left = 0; left <= rest; ++left)
      for (auto& u : all_tuples(int(al->size()), left))
        for (auto& v : all_tuples(int(al->size()), rest - left)) {
          Word wu, wv;
          for (int x : u) wu.push_back(Gen(x - 1));
          for (int x : v) wv.push_back(Gen(x - 1));
          span.push_back(NCPoly::monomial(wu, RatQ(1), al) * r * NCPoly::monomial(wv, RatQ(1), al));
        }
  }
  return span_rank(span);
}

void slice_dimension(Evidence& ev) {
  int n = int(ev.param("n")), top = ev.cap();
  AlgebraHandle A = rq(n, n);
  uint64_t gens = A.alphabet()->size();
  for (int d = 2; d <= top; ++d) {
    uint64_t all = 1;
    for (int k = 0; k < d; ++k) all *= gens;
    uint64_t normal = count_normal_words(*A.rules(d), gens, d);
    size_t ideal = ideal_dimension(A, d);
    ev.exact(normal == all - ideal,
             "degree " + std::to_string(d) + " slice: " + std::to_string(normal) + " normal words" +
                 " n=" + std::to_string(n));
  }
}

Rational ordinary_det(Matrix<Rational> M) {
  size_t n = M.rows();
  Rational det = 1;
  for (size_t c = 1; c <= n; ++c) {
    size_t p = c;
    while (p <= n && M(p, c) == 0) ++p;
    if (p > n) return 0;
    if (p != c) {
      for (size_t j = 1; j <= n; ++j) std::swap(M(p, j), M(c, j));
      det = -det;
    }
    det *= M(c, c);
    for (size_t r = c + 1; r <= n; ++r) {
      Rational f = M(r, c) / M(c, c);
      for (size_t j = c; j <= n; ++j) M(r, j) -= f * M(c, j);
    }
  }
  return det;
}

Matrix<Rational> at_one(const Matrix<RatQ>& M) {
  return M.map([](const RatQ& x) { return x.subs(Rational(1)); });
}

void q1_specialization(Evidence& ev) {
  int n = int(ev.param("n")), trials = int(ev.param("trials")), mtop = int(ev.param("m"));
  std::mt19937 rng(uint32_t(ev.param("seed")));
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int t = 0; t < trials; ++t) {
    Matrix<RatQ> M(n, n);
    Matrix<Rational> R(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        R(i, j) = make_rational(num(rng), den(rng));
        M(i, j) = RatQ(R(i, j));
      }
    std::string tag = " trial " + std::to_string(t);
    ev.exact(det_q(M).subs(Rational(1)) == ordinary_det(R), "det at q = 1" + tag);
    Matrix<Rational> P = R;
    for (int m = 2; m <= mtop; ++m) {
      P = P * R;
      ev.exact(at_one(q_power(M, m)) == P, "q-power " + std::to_string(m) + " at q = 1" + tag);
    }
  }
}

}  // namespace

void register_engine_checks() {
  register_check({"completion_determinism", "engine", "completion output is deterministic",
                  {{"degree", 5}}, Status::Proved, true, completion_determinism});
  register_check({"slice_dimension", "engine", "graded slice dimensions against a dense oracle",
                  {{"n", 2}, {"degree", 4}}, Status::Proved, true, slice_dimension});
  register_check({"q1_specialization", "engine", "q = 1 specialization of det and q-powers",
                  {{"n", 3}, {"m", 4}, {"trials", 20}, {"seed", 7}}, Status::Proved, true,
                  q1_specialization});
}

}  // namespace qm
