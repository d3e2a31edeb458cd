// Acceptance criteria 1-8: one PASS/FAIL line each; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qmanin/algebras.hpp"
#include "qmanin/expr.hpp"
#include "qmanin/qlinalg.hpp"
#include "qmanin/ruleset_io.hpp"
#include "qmanin/verify.hpp"

using namespace qm;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream why;
  void fail(const std::string& s) {
    if (!pass) why << "; ";
    pass = false;
    why << s;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<CheckRecord> all_records;

std::vector<CheckRecord> run_group(const std::string& group, double* elapsed) {
  RunOptions o;
  o.keep_traces = true;
  auto t0 = std::chrono::steady_clock::now();
  auto rs = run_suite(group + ".*", o);
  *elapsed = seconds_since(t0);
  for (auto& r : rs) all_records.push_back(r);
  return rs;
}

const CheckRecord* find(const std::vector<CheckRecord>& rs, const std::string& id) {
  for (auto& r : rs)
    if (r.check_id == id) return &r;
  return nullptr;
}

void expect_status(Outcome& o, const std::vector<CheckRecord>& rs, const std::string& id, Status s) {
  const CheckRecord* r = find(rs, id);
  if (!r)
    o.fail(id + " missing");
  else if (r->status != s)
    o.fail(id + " is " + status_name(r->status) + ": " + r->detail.substr(0, 200));
}

void expect_param(Outcome& o, const std::vector<CheckRecord>& rs, const std::string& id,
                  const std::string& key, long at_least) {
  const CheckRecord* r = find(rs, id);
  if (r && (!r->params.count(key) || r->params.at(key) < at_least))
    o.fail(id + " runs with " + key + " < " + std::to_string(at_least));
}

void gating_as_expected(Outcome& o, const std::vector<CheckRecord>& rs) {
  for (auto& r : rs)
    if (r.gating && r.status != r.expected)
      o.fail(r.check_id + " is " + status_name(r.status) + ": " + r.detail.substr(0, 200));
}

void within(Outcome& o, double elapsed, double budget) {
  if (elapsed > budget)
    o.fail("took " + std::to_string(elapsed) + " s, budget " + std::to_string(budget) + " s");
}

// 1. Literal expansions of the column determinant.
Outcome det_fixtures() {
  Outcome o;
  AlgebraHandle A2 = free_matrix(2, 2), A3 = free_matrix(3, 3);
  NCPoly lit2 = parse_expr("a*d - q^-1*c*b", A2.alphabet());
  NCPoly lit3 = parse_expr(
      "M11*M22*M33 + q^-2*M21*M32*M13 + q^-2*M31*M12*M23"
      " - q^-1*M11*M32*M23 - q^-1*M21*M12*M33 - q^-3*M31*M22*M13",
      A3.alphabet());
  NCPoly d2 = det_q(A2.matrix()), d3 = det_q(A3.matrix());
  if (d2.size() != 2 || !(d2 - lit2).is_zero()) o.fail("2x2: " + d2.str());
  if (d3.size() != 6 || !(d3 - lit3).is_zero()) o.fail("3x3: " + d3.str());
  return o;
}

// 2. Elementary properties at degree <= 4 and n <= 3.
Outcome elementary() {
  Outcome o;
  double t;
  auto rs = run_group("elementary", &t);
  if (rs.empty()) o.fail("no checks");
  for (auto& r : rs) {
    if (r.status != Status::Proved) o.fail(r.check_id + " is " + status_name(r.status));
    if (r.params.at("degree") > 4 || r.completion_degree > 4)
      o.fail(r.check_id + " needs degree above 4");
  }
  for (auto& id : {"coaction_x", "coaction_psi", "single_formula", "closure_properties", "flip"})
    expect_param(o, rs, id, "n", 3);
  within(o, t, 30);
  return o;
}

// 3. Determinant suite.
Outcome determinant() {
  Outcome o;
  double t;
  auto rs = run_group("determinant", &t);
  for (auto& id : {"det_fixtures", "grassmann_det", "det_property_1", "det_property_2",
                   "det_property_3", "det_property_4", "det_property_5", "det_property_6", "cramer",
                   "quasidet", "gauss"})
    expect_status(o, rs, id, Status::Proved);
  for (int k = 1; k <= 6; ++k) expect_param(o, rs, "det_property_" + std::to_string(k), "n", 3);
  expect_param(o, rs, "cramer", "n", 3);
  expect_status(o, rs, "det_property_7", Status::Refuted);
  if (const CheckRecord* r = find(rs, "det_property_7")) {
    const auto& w = r->witness;
    if (!w.is_object() || w.value("kind", "") != "representation" || w.value("truncation", 0) != 8 ||
        w.value("value", nlohmann::json()).is_null())
      o.fail("det_property_7 witness is not a quantum-plane entry: " + w.dump());
  }
  gating_as_expected(o, rs);
  within(o, t, 600);
  return o;
}

// 4. Inverse suite; the n = 3 Jacobi ratio is reported only.
Outcome inverse() {
  Outcome o;
  double t;
  auto rs = run_group("inverse", &t);
  for (auto& id : {"jacobi_ratio", "ldjlc", "ldjlc_adjoint", "inverse_is_qinv_manin", "schur",
                   "sylvester", "plucker"})
    expect_status(o, rs, id, Status::Proved);
  if (const CheckRecord* r = find(rs, "jacobi_ratio"))
    if (r->params.at("degree") > 8) o.fail("jacobi_ratio needs degree above 8");
  gating_as_expected(o, rs);
  if (const CheckRecord* r = find(rs, "jacobi_ratio_stretch"))
    std::cout << "  note: n=3 Jacobi ratio (non-gating): " << status_name(r->status) << "\n";
  within(o, t, 1800);
  return o;
}

// 5. Tensor suite.
Outcome tensor() {
  Outcome o;
  double t;
  auto rs = run_group("tensor", &t);
  for (auto& id : {"pyatov", "antisym_invariance", "components", "trace_minors", "amm_det",
                   "cayley_hamilton", "newton", "inverse_tensor"})
    expect_status(o, rs, id, Status::Proved);
  for (auto& id : {"pyatov", "antisym_invariance", "components", "cayley_hamilton", "newton"})
    expect_param(o, rs, id, "n", 3);
  expect_param(o, rs, "newton", "m", 4);
  gating_as_expected(o, rs);
  within(o, t, 600);
  return o;
}

// 6. R-matrix and L-operator suite.
Outcome lax() {
  Outcome o;
  double t;
  auto rs = run_group("lax", &t);
  for (auto& id : {"ybe", "r_special", "fusion", "rll", "manin_from_lax", "qdet_lax", "tk_commute",
                   "ik_commute"})
    expect_status(o, rs, id, Status::Proved);
  for (auto& id : {"ybe", "fusion", "rll", "manin_from_lax", "qdet_lax"}) expect_param(o, rs, id, "n", 3);
  expect_param(o, rs, "fusion", "m", 4);
  for (auto& id : {"rll", "tk_commute", "ik_commute"}) expect_param(o, rs, id, "sites", 2);
  gating_as_expected(o, rs);
  within(o, t, 600);
  return o;
}

// Rank of a list of rows of rationals.
size_t rank(std::vector<std::vector<Rational>> rows) {
  size_t r = 0, cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Degree-d slice of the ideal of RQ(2,2), by dense elimination at a numeric q.
size_t dense_ideal_dim(const std::vector<std::string>& relations, int d, const Rational& qv) {
  const std::vector<std::string> gens{"a", "b", "c", "d"};
  std::map<std::string, size_t> col;
  std::vector<std::string> words{""};
  for (int k = 0; k < d; ++k) {
    std::vector<std::string> next;
    for (auto& w : words)
      for (auto& g : gens) next.push_back(w + g);
    words = next;
  }
  for (size_t k = 0; k < words.size(); ++k) col[words[k]] = k;
  // relations as (coefficient(q), word) lists over single-letter generators
  AlgebraHandle F = free_matrix(2, 2);
  std::vector<std::vector<Rational>> rows;
  for (auto& text : relations) {
    NCPoly r = parse_expr(text, F.alphabet());
    int rest = d - int(r.degree());
    std::vector<std::string> pads{""};
    for (int k = 0; k < rest; ++k) {
      std::vector<std::string> next;
      for (auto& w : pads)
        for (auto& g : gens) next.push_back(w + g);
      pads = next;
    }
    for (int left = 0; left <= rest; ++left)
      for (auto& pad : pads) {
        std::vector<Rational> row(words.size());
        for (auto& [w, c] : r.terms()) {
          std::string s;
          for (Gen g : w) s += gens[g];
          row[col.at(pad.substr(0, left) + s + pad.substr(left))] += c.subs(qv);
        }
        rows.push_back(row);
      }
  }
  return rank(rows);
}

// 7. Replay of every kept trace, byte-identical serialization, slice dimensions.
Outcome soundness() {
  Outcome o;
  size_t replayed = 0;
  for (auto& r : all_records) {
    if (r.status != Status::Proved) continue;
    for (auto& ob : r.obligations) {
      auto rs = ob.algebra.rules(ob.degree);
      if (!replay_trace(ob.residual, ob.trace, *rs, NCPoly(RatQ(), ob.algebra.alphabet())))
        o.fail(r.check_id + ": trace does not replay");
      ++replayed;
    }
    if (r.witness.value("reductions", 0) != r.obligations.size())
      o.fail(r.check_id + ": reductions without a kept trace");
  }
  std::cout << "  note: " << replayed << " reduction traces replayed\n";

  for (auto make : {std::function<AlgebraHandle()>([] { return right_quantum(2, 2); }),
                    std::function<AlgebraHandle()>([] { return right_quantum(3, 3); }),
                    std::function<AlgebraHandle()>([] {
                      return localize_matrix(right_quantum(2, 2), "M", "U", Side::both);
                    })}) {
    AlgebraHandle A = make(), B = make();
    std::string a = serialize_ruleset(*A.rules(5), A.stats(5));
    std::string b = serialize_ruleset(*B.rules(5), B.stats(5));
    if (a != b) o.fail(A.name() + ": serialization differs between runs");
  }
  RunOptions stable;
  stable.stable = true;
  std::string r1 = report_json(run_suite("engine.*", stable)).dump(2);
  stable.jobs = 2;
  std::string r2 = report_json(run_suite("engine.*", stable)).dump(2);
  if (r1 != r2) o.fail("reports differ between runs");

  // a c = q^-1 c a, b d = q^-1 d b, a d - d a = q^-1 c b - q b c
  std::vector<std::string> rels{"a*c - q^-1*c*a", "b*d - q^-1*d*b", "a*d - d*a - q^-1*c*b + q*b*c"};
  AlgebraHandle A = right_quantum(2, 2);
  for (int d = 2; d <= 4; ++d) {
    uint64_t all = 1;
    for (int k = 0; k < d; ++k) all *= 4;
    size_t ideal = std::max(dense_ideal_dim(rels, d, Rational(5, 3)), dense_ideal_dim(rels, d, Rational(7, 2)));
    uint64_t normal = count_normal_words(*A.rules(d), 4, d);
    if (normal != all - ideal)
      o.fail("degree " + std::to_string(d) + ": " + std::to_string(normal) + " normal words, oracle " +
             std::to_string(all - ideal));
  }
  return o;
}

Rational leibniz3(const Matrix<Rational>& m) {
  return m(1, 1) * (m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2)) -
         m(1, 2) * (m(2, 1) * m(3, 3) - m(2, 3) * m(3, 1)) +
         m(1, 3) * (m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1));
}

Matrix<Rational> mul(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Matrix<Rational> c(3, 3, Rational(0));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

// 8. q = 1 on commuting numeric matrices.
Outcome specialization() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
  for (int t = 0; t < 25; ++t) {
    Matrix<Rational> R(3, 3);
    Matrix<RatQ> M(3, 3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        R(i, j) = make_rational(num(rng), den(rng));
        M(i, j) = RatQ(R(i, j));
      }
    if (det_q(M).subs(Rational(1)) != leibniz3(R)) o.fail("det at trial " + std::to_string(t));
    Matrix<Rational> P = R;
    for (int m = 2; m <= 4; ++m) {
      P = mul(P, R);
      Matrix<RatQ> Q = q_power(M, m);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          if (Q(i, j).subs(Rational(1)) != P(i, j))
            o.fail("power " + std::to_string(m) + " at trial " + std::to_string(t));
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 determinant fixtures", det_fixtures}, {"2 elementary properties", elementary},
      {"3 determinant suite", determinant},     {"4 inverse suite", inverse},
      {"5 tensor suite", tensor},               {"6 R-matrix and L-operator suite", lax},
      {"7 engine soundness", soundness},        {"8 q = 1 specialization", specialization},
  };
  bool ok = true;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << seconds_since(t0) << " s)";
    if (!o.pass) std::cout << ": " << o.why.str();
    std::cout << std::endl;
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
