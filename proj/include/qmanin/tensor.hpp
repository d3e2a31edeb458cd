#pragma once
#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmanin/matrix.hpp"
#include "qmanin/qlinalg.hpp"

namespace qm {

void set_tensor_parallel(bool on);
bool tensor_parallel();

// Operator on (C^n)^{(x)m}; rows and columns are flat multi-indices, first factor most
// significant. Entries are stored sparsely per row, sorted by column.
template <class T>
class Tensor {
 public:
  using Entry = std::pair<size_t, T>;
  using Row = std::vector<Entry>;

  Tensor() = default;
  Tensor(int n, int m) : n_(n), m_(m), dim_(ipow(n, m)), rows_(dim_) {}
  static Tensor identity(int n, int m, const T& one) {
    Tensor t(n, m);
    for (size_t i = 0; i < t.dim_; ++i) t.rows_[i].emplace_back(i, one);
    return t;
  }

  int factor_dim() const { return n_; }
  int factors() const { return m_; }
  size_t dim() const { return dim_; }
  const Row& row(size_t r) const { return rows_[r]; }

  size_t index(const MultiIndex& I) const {
    if (int(I.size()) != m_) throw std::invalid_argument("tensor: index arity");
    size_t k = 0;
    for (int i : I) {
      if (i < 1 || i > n_) throw std::out_of_range("tensor: index");
      k = k * n_ + size_t(i - 1);
    }
    return k;
  }
  MultiIndex multi(size_t k) const {
    MultiIndex I(m_);
    for (int p = m_ - 1; p >= 0; --p) {
      I[p] = int(k % n_) + 1;
      k /= n_;
    }
    return I;
  }

  const T* find(size_t r, size_t c) const {
    const Row& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, size_t v) { return e.first < v; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  }
  T get(size_t r, size_t c, const T& zero) const {
    const T* p = find(r, c);
    return p ? *p : zero;
  }
  void add(size_t r, size_t c, const T& v) {
    if (v.is_zero()) return;
    Row& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, size_t x) { return e.first < x; });
    if (it != row.end() && it->first == c) {
      it->second = it->second + v;
      if (it->second.is_zero()) row.erase(it);
    } else {
      row.insert(it, Entry(c, v));
    }
  }
  void set(size_t r, size_t c, const T& v) {
    Row& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, size_t x) { return e.first < x; });
    if (it != row.end() && it->first == c) {
      if (v.is_zero())
        row.erase(it);
      else
        it->second = v;
    } else if (!v.is_zero()) {
      row.insert(it, Entry(c, v));
    }
  }

  bool is_zero() const {
    for (auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }
  size_t nnz() const {
    size_t k = 0;
    for (auto& r : rows_) k += r.size();
    return k;
  }

  template <class F>
  auto map(F f) const -> Tensor<decltype(f(std::declval<const T&>()))> {
    Tensor<decltype(f(std::declval<const T&>()))> out(n_, m_);
    for (size_t r = 0; r < dim_; ++r)
      for (auto& [c, v] : rows_[r]) out.set(r, c, f(v));
    return out;
  }

  friend Tensor operator+(const Tensor& a, const Tensor& b) {
    check_shape(a, b);
    Tensor r(a.n_, a.m_);
    for (size_t i = 0; i < a.dim_; ++i) r.rows_[i] = merge(a.rows_[i], b.rows_[i], false);
    return r;
  }
  friend Tensor operator-(const Tensor& a, const Tensor& b) {
    check_shape(a, b);
    Tensor r(a.n_, a.m_);
    for (size_t i = 0; i < a.dim_; ++i) r.rows_[i] = merge(a.rows_[i], b.rows_[i], true);
    return r;
  }
  friend Tensor operator*(const Tensor& a, const RatQ& c) {
    if (c.is_zero()) return Tensor(a.n_, a.m_);
    Tensor r = a;
    for (auto& row : r.rows_)
      for (auto& e : row) e.second = e.second * c;
    return r;
  }
  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    check_shape(a, b);
    Tensor r(a.n_, a.m_);
    long n = long(a.dim_);
#pragma omp parallel for schedule(dynamic) if (tensor_parallel() && n >= 16)
    for (long i = 0; i < n; ++i) {
      std::vector<std::pair<size_t, T>> acc;
      for (auto& [k, x] : a.rows_[i])
        for (auto& [j, y] : b.rows_[k]) acc.emplace_back(j, x * y);
      r.rows_[i] = compress(std::move(acc));
    }
    return r;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) { return (a - b).is_zero(); }

  // Trace over the listed factors (1-based).
  Tensor partial_trace(std::vector<int> factors) const {
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    for (int f : factors)
      if (f < 1 || f > m_) throw std::out_of_range("partial_trace: factor");
    std::vector<int> keep;
    for (int p = 1; p <= m_; ++p)
      if (!std::binary_search(factors.begin(), factors.end(), p)) keep.push_back(p);
    Tensor out(n_, int(keep.size()));
    for (size_t r = 0; r < dim_; ++r) {
      MultiIndex I = multi(r);
      for (auto& [c, v] : rows_[r]) {
        MultiIndex J = multi(c);
        bool diag = true;
        for (int f : factors)
          if (I[f - 1] != J[f - 1]) {
            diag = false;
            break;
          }
        if (!diag) continue;
        size_t rr = 0, cc = 0;
        for (int p : keep) {
          rr = rr * n_ + size_t(I[p - 1] - 1);
          cc = cc * n_ + size_t(J[p - 1] - 1);
        }
        out.add(rr, cc, v);
      }
    }
    return out;
  }
  // Full trace as a scalar of type T.
  T trace(const T& zero) const {
    T acc = zero;
    for (size_t r = 0; r < dim_; ++r)
      if (const T* p = find(r, r)) acc = acc + *p;
    return acc;
  }

 private:
  static size_t ipow(int n, int m) {
    size_t k = 1;
    for (int i = 0; i < m; ++i) k *= size_t(n);
    return k;
  }
  static void check_shape(const Tensor& a, const Tensor& b) {
    if (a.n_ != b.n_ || a.m_ != b.m_) throw std::invalid_argument("tensor shape mismatch");
  }
  static Row merge(const Row& x, const Row& y, bool sub) {
    Row out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, sub ? -y[j].second : y[j].second);
        ++j;
      } else {
        T v = sub ? x[i].second - y[j].second : x[i].second + y[j].second;
        if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }
  // Sums duplicate columns in order of appearance within each column.
  static Row compress(std::vector<std::pair<size_t, T>> acc) {
    std::stable_sort(acc.begin(), acc.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Row out;
    for (size_t i = 0; i < acc.size();) {
      size_t j = i + 1;
      T v = std::move(acc[i].second);
      for (; j < acc.size() && acc[j].first == acc[i].first; ++j) v = v + acc[j].second;
      if (!v.is_zero()) out.emplace_back(acc[i].first, std::move(v));
      i = j;
    }
    return out;
  }

  int n_ = 0, m_ = 0;
  size_t dim_ = 0;
  std::vector<Row> rows_;
};

// Leningrad embedding: places T (arity r) into factors pos[0..r-1] of an m-fold product.
template <class T>
Tensor<T> embed(const Tensor<T>& t, const std::vector<int>& pos, int m) {
  int n = t.factor_dim();
  if (int(pos.size()) != t.factors()) throw std::invalid_argument("embed: arity");
  std::vector<bool> used(m + 1, false);
  for (int p : pos) {
    if (p < 1 || p > m || used[p]) throw std::invalid_argument("embed: positions");
    used[p] = true;
  }
  std::vector<int> rest;
  for (int p = 1; p <= m; ++p)
    if (!used[p]) rest.push_back(p);
  Tensor<T> out(n, m);
  size_t nrest = 1;
  for (size_t k = 0; k < rest.size(); ++k) nrest *= size_t(n);
  std::vector<size_t> stride(m + 1);
  {
    size_t s = 1;
    for (int p = m; p >= 1; --p) {
      stride[p] = s;
      s *= size_t(n);
    }
  }
  for (size_t r = 0; r < t.dim(); ++r) {
    MultiIndex I = t.multi(r);
    size_t rbase = 0;
    for (size_t k = 0; k < pos.size(); ++k) rbase += size_t(I[k] - 1) * stride[pos[k]];
    for (auto& [c, v] : t.row(r)) {
      MultiIndex J = t.multi(c);
      size_t cbase = 0;
      for (size_t k = 0; k < pos.size(); ++k) cbase += size_t(J[k] - 1) * stride[pos[k]];
      for (size_t e = 0; e < nrest; ++e) {
        size_t off = 0, x = e;
        for (int k = int(rest.size()) - 1; k >= 0; --k) {
          off += (x % size_t(n)) * stride[rest[k]];
          x /= size_t(n);
        }
        out.set(rbase + off, cbase + off, v);
      }
    }
  }
  return out;
}

// M^{(k)} inside an m-fold product, for a matrix with entries of type T.
template <class T>
Tensor<T> embed_matrix(const Matrix<T>& M, int k, int m) {
  if (!M.square()) throw std::invalid_argument("embed_matrix: non-square");
  int n = int(M.rows());
  Tensor<T> t(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) t.set(i - 1, j - 1, M(i, j));
  return embed(t, {k}, m);
}

// Entries c -> one * c.
template <class T>
Tensor<T> lift(const Tensor<RatQ>& t, const T& one) {
  return t.map([&](const RatQ& c) { return one * c; });
}

// Block (i, j) of the first factor: an operator on the remaining factors.
template <class T>
Tensor<T> first_factor_block(const Tensor<T>& t, int i, int j) {
  int n = t.factor_dim(), m = t.factors();
  Tensor<T> out(n, m - 1);
  size_t sub = out.dim();
  size_t r0 = size_t(i - 1) * sub, c0 = size_t(j - 1) * sub;
  for (size_t r = 0; r < sub; ++r)
    for (auto& [c, v] : t.row(r0 + r))
      if (c >= c0 && c < c0 + sub) out.set(r, c - c0, v);
  return out;
}

// Inverse of first_factor_block: sum_ij E_ij (x) B_ij.
template <class T>
Tensor<T> from_blocks(const Matrix<Tensor<T>>& B) {
  int n = int(B.rows());
  const Tensor<T>& b11 = B(1, 1);
  Tensor<T> out(b11.factor_dim(), b11.factors() + 1);
  if (b11.factor_dim() != n) throw std::invalid_argument("from_blocks: dimension");
  size_t sub = b11.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (size_t r = 0; r < sub; ++r)
        for (auto& [c, v] : B(i, j).row(r))
          out.set(size_t(i - 1) * sub + r, size_t(j - 1) * sub + c, v);
  return out;
}

template <class T>
struct Ring<Tensor<T>> {
  static Tensor<T> zero_like(const Tensor<T>& x) {
    return Tensor<T>(x.factor_dim(), x.factors());
  }
  static Tensor<T> one_like(const Tensor<T>& x) {
    for (size_t r = 0; r < x.dim(); ++r)
      if (!x.row(r).empty())
        return Tensor<T>::identity(x.factor_dim(), x.factors(),
                                   Ring<T>::one_like(x.row(r).front().second));
    return Tensor<T>::identity(x.factor_dim(), x.factors(), T(1));
  }
};

}  // namespace qm
