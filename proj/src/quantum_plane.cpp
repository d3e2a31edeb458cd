#include "qmanin/quantum_plane.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmanin/ncpoly.hpp"

namespace qm {

QuantumPlaneRep::QuantumPlaneRep(int N) : N_(N) {
  if (N < 0) throw std::invalid_argument("quantum plane: negative truncation");
  for (int d = 0; d <= N; ++d)
    for (int a = d; a >= 0; --a) basis_.emplace_back(a, d - a);
}

size_t QuantumPlaneRep::index(int a, int b) const {
  if (a < 0 || b < 0 || a + b > N_) throw std::out_of_range("quantum plane: monomial");
  int d = a + b;
  return size_t(d * (d + 1) / 2 + (d - a)) + 1;
}

std::string QuantumPlaneRep::monomial_str(size_t k) const {
  auto [a, b] = basis_.at(k - 1);
  if (a == 0 && b == 0) return "1";
  std::string s;
  if (a) s += a == 1 ? "x" : "x^" + std::to_string(a);
  if (b) s += (s.empty() ? "" : "*") + (b == 1 ? std::string("y") : "y^" + std::to_string(b));
  return s;
}

OpMatrix QuantumPlaneRep::identity() const {
  OpMatrix m(dim(), dim());
  for (size_t i = 1; i <= dim(); ++i) m(i, i) = RatQ(1);
  return m;
}

OpMatrix QuantumPlaneRep::x() const {
  OpMatrix m(dim(), dim());
  for (auto [a, b] : basis_)
    if (a + b < N_) m(index(a + 1, b), index(a, b)) = RatQ(1);
  return m;
}

// y x^a y^b = q^a x^a y^{b+1}
OpMatrix QuantumPlaneRep::y() const {
  OpMatrix m(dim(), dim());
  for (auto [a, b] : basis_)
    if (a + b < N_) m(index(a, b + 1), index(a, b)) = RatQ::q(a);
  return m;
}

OpMatrix QuantumPlaneRep::dx() const {
  OpMatrix m(dim(), dim());
  for (auto [a, b] : basis_)
    if (a > 0) m(index(a - 1, b), index(a, b)) = RatQ(a);
  return m;
}

// dy x^a y^b = b q^{-a} x^a y^{b-1}
OpMatrix QuantumPlaneRep::dy() const {
  OpMatrix m(dim(), dim());
  for (auto [a, b] : basis_)
    if (b > 0) m(index(a, b - 1), index(a, b)) = RatQ(b) * RatQ::q(-a);
  return m;
}

OpMatrix QuantumPlaneRep::q_ydy(int sign) const {
  OpMatrix m(dim(), dim());
  for (auto [a, b] : basis_) m(index(a, b), index(a, b)) = RatQ::q(2 * sign * b);
  return m;
}

namespace {

OpMatrix mul_sparse(const OpMatrix& A, const OpMatrix& B) {
  size_t n = A.rows();
  OpMatrix R(n, B.cols());
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = 1; j <= A.cols(); ++j) {
      const RatQ& a = A(i, j);
      if (a.is_zero()) continue;
      for (size_t k = 1; k <= B.cols(); ++k)
        if (!B(j, k).is_zero()) R(i, k) += a * B(j, k);
    }
  return R;
}

}  // namespace

RepValue eval_in_rep(const NCPoly& p, const QuantumPlaneRep& rep,
                     const std::vector<OpMatrix>& assignment) {
  std::vector<int> raise(assignment.size(), 0);
  for (size_t g = 0; g < assignment.size(); ++g) {
    const OpMatrix& A = assignment[g];
    for (size_t i = 1; i <= A.rows(); ++i)
      for (size_t j = 1; j <= A.cols(); ++j)
        if (!A(i, j).is_zero())
          raise[g] = std::max(raise[g], rep.degree(i - 1) - rep.degree(j - 1));
  }
  OpMatrix acc(rep.dim(), rep.dim());
  int worst = 0;
  for (auto& [w, c] : p.terms()) {
    OpMatrix t = rep.identity();
    int r = 0;
    for (Gen g : w) {
      if (g >= assignment.size()) throw std::invalid_argument("eval_in_rep: unassigned generator");
      t = mul_sparse(t, assignment[g]);
      r += raise[g];
    }
    worst = std::max(worst, r);
    for (size_t i = 1; i <= rep.dim(); ++i)
      for (size_t j = 1; j <= rep.dim(); ++j)
        if (!t(i, j).is_zero()) acc(i, j) += c * t(i, j);
  }
  return RepValue{acc, rep.truncation() - worst};
}

std::string RepWitness::describe(const QuantumPlaneRep& rep) const {
  return "<" + rep.monomial_str(row) + "| op |" + rep.monomial_str(col) + "> = " + value.str();
}

std::optional<RepWitness> find_witness(const RepValue& v, const QuantumPlaneRep& rep) {
  for (size_t j = 1; j <= rep.dim(); ++j) {
    if (rep.degree(j - 1) > v.safe_degree) continue;
    for (size_t i = 1; i <= rep.dim(); ++i)
      if (!v.op(i, j).is_zero()) return RepWitness{i, j, v.op(i, j)};
  }
  return std::nullopt;
}

std::vector<OpMatrix> quantum_plane_manin(const QuantumPlaneRep& rep) {
  OpMatrix s = rep.q_ydy(-1);
  OpMatrix b = mul_sparse(s, rep.dy()).map([](const RatQ& v) { return v * RatQ::q(-1); });
  return {rep.x(), b, rep.y(), mul_sparse(s, rep.dx())};
}

}  // namespace qm
