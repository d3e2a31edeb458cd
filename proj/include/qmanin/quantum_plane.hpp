#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmanin/matrix.hpp"
#include "qmanin/ratq.hpp"

namespace qm {

using OpMatrix = Matrix<RatQ>;

// Truncated quantum plane yx = q xy with basis x^a y^b, a + b <= N.
class QuantumPlaneRep {
 public:
  explicit QuantumPlaneRep(int N = 8);
  int truncation() const { return N_; }
  size_t dim() const { return basis_.size(); }
  const std::pair<int, int>& monomial(size_t k) const { return basis_[k]; }  // (a, b)
  int degree(size_t k) const { return basis_[k].first + basis_[k].second; }
  size_t index(int a, int b) const;  // 1-based row/column index
  std::string monomial_str(size_t k) const;

  OpMatrix identity() const;
  OpMatrix x() const;
  OpMatrix y() const;
  OpMatrix dx() const;
  OpMatrix dy() const;
  OpMatrix q_ydy(int sign) const;  // q^{sign * 2 y dy}

 private:
  int N_;
  std::vector<std::pair<int, int>> basis_;
};

struct RepValue {
  OpMatrix op;
  int safe_degree;  // columns with monomial degree <= safe_degree are exact
};

// Substitutes generator id k -> assignment[k]. Raising operators drop components beyond
// degree N; the result is exact on the safe sub-basis.
RepValue eval_in_rep(const NCPoly& p, const QuantumPlaneRep& rep,
                     const std::vector<OpMatrix>& assignment);

struct RepWitness {
  size_t row, col;
  RatQ value;
  std::string describe(const QuantumPlaneRep& rep) const;
};
// First nonzero entry on the safe sub-basis, if any.
std::optional<RepWitness> find_witness(const RepValue& v, const QuantumPlaneRep& rep);

// The 2x2 q-Manin matrix of difference operators
// (x, q^{-1} q^{-2y dy} dy; y, q^{-2y dy} dx).
std::vector<OpMatrix> quantum_plane_manin(const QuantumPlaneRep& rep);

}  // namespace qm
