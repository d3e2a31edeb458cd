#include "qmanin/qlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace qm {

int inversions(const MultiIndex& p) {
  int c = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

bool has_repeats(const MultiIndex& p) {
  MultiIndex s = p;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

std::vector<MultiIndex> permutations(int n) {
  MultiIndex p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<MultiIndex> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<MultiIndex> increasing_subsets(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  MultiIndex c(k);
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<MultiIndex> all_tuples(int n, int k) {
  std::vector<MultiIndex> out;
  MultiIndex t(k, 1);
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == n) t[i--] = 1;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

MultiIndex complement(const MultiIndex& I, int n) {
  MultiIndex out;
  for (int i = 1; i <= n; ++i)
    if (std::find(I.begin(), I.end(), i) == I.end()) out.push_back(i);
  return out;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

RatQ eps_q(const MultiIndex& idx, int qsign) {
  if (has_repeats(idx)) return RatQ();
  return neg_pq(qsign, -inversions(idx));
}

std::pair<RatQ, RatQ> eps_split(const MultiIndex& I, int n) {
  int m = int(I.size());
  int a = 0, b = 0;
  for (int l = 0; l < m; ++l) {
    a += I[l] - (l + 1);
    b += I[l];
  }
  for (int l = n - m + 1; l <= n; ++l) b -= l;
  return {neg_pq(1, -a), neg_pq(1, b)};
}

}  // namespace qm
