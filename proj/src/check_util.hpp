#pragma once
#include <map>
#include <string>
#include <vector>

#include "qmanin/algebras.hpp"
#include "qmanin/qlinalg.hpp"
#include "qmanin/tensor.hpp"
#include "qmanin/verify.hpp"

namespace qm::checks {

inline AlgebraHandle rq(int n, int m, const std::string& prefix = "") {
  return shared_algebra("rq:" + std::to_string(n) + "x" + std::to_string(m) + ":" + prefix,
                        [=] { return right_quantum(n, m, prefix); });
}

inline AlgebraHandle freemat(int n, int m, const std::string& prefix = "") {
  return shared_algebra("free:" + std::to_string(n) + "x" + std::to_string(m) + ":" + prefix,
                        [=] { return free_matrix(n, m, prefix); });
}

inline NCMatrix lift(const NCMatrix& M, const AlgebraHandle& A) {
  return M.map([&](const NCPoly& p) { return transport(p, A); });
}

inline std::vector<NCPoly> entries(const NCMatrix& M) { return M.data(); }

template <class T>
std::vector<T> tensor_entries(const Tensor<T>& t) {
  std::vector<T> out;
  for (size_t r = 0; r < t.dim(); ++r)
    for (auto& [c, v] : t.row(r)) out.push_back(v);
  return out;
}

inline std::string show(const MultiIndex& I) {
  std::string s = "(";
  for (size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + std::to_string(I[k]);
  return s + ")";
}

inline std::string dims(int n, int m) { return std::to_string(n) + "x" + std::to_string(m); }

inline NCMatrix scalar_matrix(const AlgebraHandle& A, const Matrix<RatQ>& S) {
  return S.map([&](const RatQ& c) { return A.scalar(c); });
}

inline NCPoly zero_of(const AlgebraHandle& A) { return A.scalar(RatQ()); }

// Unique normal form; requires a complete rewriting system at this degree.
inline NCPoly normal_form(const AlgebraHandle& A, const NCPoly& p, int degree) {
  if (!A.stats(degree).confluent)
    throw std::runtime_error(A.name() + ": no complete rewriting system at degree " +
                             std::to_string(degree));
  NCPoly x = p.alphabet() == A.alphabet() ? p : transport(p, A);
  return reduce(x, *A.rules(degree));
}

// Smallest degree in [from, cap] with a complete system, or -1.
inline int complete_degree(const AlgebraHandle& A, int from, int cap) {
  for (int d = from; d <= cap; ++d)
    if (A.stats(d).confluent) return d;
  return -1;
}

// Splits each word at its first letter with id >= split. Returns the prefix parts keyed by
// suffix, relabelled onto the given alphabet (prefix ids are kept).
inline std::map<Word, NCPoly> coefficients_by_suffix(const NCPoly& p, Gen split,
                                                     const Alphabet* prefix_alphabet) {
  std::map<Word, NCPoly> out;
  for (auto& [w, c] : p.terms()) {
    size_t k = 0;
    while (k < w.size() && w[k] < split) ++k;
    for (size_t j = k; j < w.size(); ++j)
      if (w[j] < split) throw std::logic_error("coefficients_by_suffix: word not split");
    Word pre = w.substr(0, k), suf = w.substr(k);
    auto it = out.find(suf);
    NCPoly term = NCPoly::monomial(pre, c, prefix_alphabet);
    if (it == out.end())
      out.emplace(suf, term);
    else
      it->second += term;
  }
  return out;
}

inline std::vector<NCPoly> cross_relations(const NCMatrix& M) {
  std::vector<NCPoly> out;
  size_t n = M.rows(), m = M.cols();
  for (size_t i = 1; i <= n; ++i)
    for (size_t k = i + 1; k <= n; ++k)
      for (size_t j = 1; j <= m; ++j)
        for (size_t l = j + 1; l <= m; ++l)
          out.push_back(M(i, j) * M(k, l) - M(k, l) * M(i, j) - RatQ::q(-1) * (M(k, j) * M(i, l)) +
                        RatQ::q(1) * (M(i, l) * M(k, j)));
  return out;
}

// Only the cross relations; with q-commuting columns listed in qcols.
inline AlgebraHandle cross_algebra(int n, const std::vector<int>& qcols = {}) {
  std::string key = "cross:" + std::to_string(n);
  for (int c : qcols) key += "," + std::to_string(c);
  return shared_algebra(key, [=] {
    AlgebraHandle F = free_matrix(n, n);
    NCMatrix M = F.matrix();
    std::vector<NCPoly> rels = cross_relations(M);
    for (int c : qcols)
      for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
          rels.push_back(M(i, c) * M(k, c) - RatQ::q(-1) * (M(k, c) * M(i, c)));
    return add_relations(F, "Cross(" + std::to_string(n) + ")", rels);
  });
}

// Residual tensors as lists of entries over A.
inline std::vector<NCPoly> flatten(const std::vector<Tensor<NCPoly>>& ts) {
  std::vector<NCPoly> out;
  for (auto& t : ts)
    for (auto& e : tensor_entries(t)) out.push_back(e);
  return out;
}

}  // namespace qm::checks
