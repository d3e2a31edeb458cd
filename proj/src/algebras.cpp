#include "qmanin/algebras.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "qmanin/qlinalg.hpp"
#include "qmanin/ruleset_io.hpp"

namespace qm {

std::string Presentation::hash() const {
  std::string s = name + "|";
  for (auto& g : alphabet->names()) s += g + ",";
  s += "|";
  for (auto& r : relations) s += r.str() + ";";
  return fnv1a_hex(s);
}

EngineConfig& engine_config() {
  static EngineConfig cfg;
  return cfg;
}

std::string effective_cache_dir() {
  if (const char* env = std::getenv("QMANIN_CACHE_DIR"); env && *env) return env;
  return engine_config().cache_dir;
}

AlgebraHandle::AlgebraHandle(Presentation p)
    : pres_(std::make_shared<Presentation>(std::move(p))), cache_(std::make_shared<Cache>()) {
  for (auto& r : pres_->relations) r.set_alphabet(pres_->alphabet.get());
}

NCPoly AlgebraHandle::gen(const std::string& name) const {
  return NCPoly::gen(alphabet()->id(name), alphabet());
}

NCMatrix AlgebraHandle::matrix(const std::string& grid) const {
  auto it = pres_->grids.find(grid);
  if (it == pres_->grids.end()) throw std::invalid_argument("no generator matrix named " + grid);
  const Grid& g = it->second;
  NCMatrix M(g.size(), g.empty() ? 0 : g[0].size());
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g[i].size(); ++j) M(i + 1, j + 1) = NCPoly::gen(g[i][j], alphabet());
  return M;
}

std::shared_ptr<const RuleSet> AlgebraHandle::rules(int degree) const {
  {
    std::lock_guard<std::mutex> lk(cache_->m);
    auto it = cache_->sets.find(degree);
    if (it != cache_->sets.end()) return it->second;
  }
  std::string hash = pres_->hash();
  std::string dir = effective_cache_dir();
  std::shared_ptr<const RuleSet> rs;
  CompletionStats st;
  std::string path;
  if (!dir.empty()) {
    path = (std::filesystem::path(dir) / (cache_key(hash, degree) + ".json")).string();
    if (std::filesystem::exists(path)) {
      try {
        rs = std::make_shared<const RuleSet>(load_ruleset(path, alphabet(), hash, degree, &st));
      } catch (const std::exception&) {
        rs.reset();
      }
    }
  }
  if (!rs) {
    const EngineConfig& cfg = engine_config();
    CompletionOptions opts;
    opts.max_degree = degree;
    opts.monomial_cap = cfg.monomial_cap;
    opts.time_cap_seconds = cfg.time_cap_seconds;
    opts.parallel = cfg.parallel;
    rs = std::make_shared<const RuleSet>(
        complete(pres_->relations, alphabet(), opts, hash, &st));
    if (!path.empty()) {
      std::filesystem::create_directories(dir);
      save_ruleset(path, *rs, st);
    }
  }
  std::lock_guard<std::mutex> lk(cache_->m);
  auto [it, fresh] = cache_->sets.emplace(degree, rs);
  if (fresh) cache_->stats[degree] = st;
  return it->second;
}

CompletionStats AlgebraHandle::stats(int degree) const {
  rules(degree);
  std::lock_guard<std::mutex> lk(cache_->m);
  return cache_->stats[degree];
}

MembershipResult AlgebraHandle::prove_zero(const NCPoly& p, int degree) const {
  NCPoly x = p;
  if (x.alphabet() && x.alphabet() != alphabet())
    throw AlphabetMismatch("prove_zero: polynomial from another algebra");
  x.set_alphabet(alphabet());
  return is_zero_mod(x, *rules(degree));
}

bool AlgebraHandle::collapsed(int degree) const {
  return reduce(one(), *rules(degree)).is_zero();
}

std::string matrix_entry_name(const std::string& prefix, int n, int m, int i, int j) {
  if (prefix.empty() && n == 2 && m == 2) return std::string(1, "abcd"[(i - 1) * 2 + (j - 1)]);
  std::string p = prefix.empty() ? "M" : prefix;
  if (n <= 9 && m <= 9) return p + std::to_string(i) + std::to_string(j);
  return p + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

struct Builder {
  std::vector<std::string> names;
  std::map<std::string, Grid> grids;
  Grid add_grid(const std::string& gname, const std::string& prefix, int n, int m) {
    Grid g(n, std::vector<Gen>(m));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= m; ++j) {
        g[i - 1][j - 1] = Gen(names.size());
        names.push_back(matrix_entry_name(prefix, n, m, i, j));
      }
    grids[gname] = g;
    return g;
  }
};

Presentation finish(const std::string& name, Builder& b) {
  Presentation p;
  p.name = name;
  p.alphabet = std::make_shared<Alphabet>(b.names);
  p.grids = b.grids;
  return p;
}

std::string grid_name(const std::string& prefix) { return prefix.empty() ? "M" : prefix; }

}  // namespace

AlgebraHandle right_quantum(int n, int m, const std::string& prefix) {
  Builder b;
  b.add_grid(grid_name(prefix), prefix, n, m);
  Presentation p = finish("RQ(" + std::to_string(n) + "," + std::to_string(m) + ")", b);
  NCMatrix M(n, m);
  const Grid& g = p.grids.begin()->second;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) M(i, j) = NCPoly::gen(g[i - 1][j - 1], p.alphabet.get());
  p.relations = manin_relations(M, 1);
  return AlgebraHandle(std::move(p));
}

AlgebraHandle quantum_matrices(int n, const std::string& prefix) {
  Builder b;
  b.add_grid(grid_name(prefix), prefix, n, n);
  Presentation p = finish("Funq(" + std::to_string(n) + ")", b);
  const Grid& g = p.grids.begin()->second;
  const Alphabet* al = p.alphabet.get();
  auto T = [&](int i, int j) { return NCPoly::gen(g[i - 1][j - 1], al); };
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) p.relations.push_back(T(k, j) * T(i, j) - RatQ::q(1) * (T(i, j) * T(k, j)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l) p.relations.push_back(T(i, l) * T(i, j) - RatQ::q(1) * (T(i, j) * T(i, l)));
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) {
          NCPoly a = T(i, j), bb = T(i, l), c = T(k, j), d = T(k, l);
          p.relations.push_back(bb * c - c * bb);
          p.relations.push_back(a * d - d * a - RatQ::q(-1) * (c * bb) + RatQ::q(1) * (bb * c));
        }
  return AlgebraHandle(std::move(p));
}

AlgebraHandle quantum_affine(int m, const std::string& prefix) {
  Builder b;
  Grid g(m, std::vector<Gen>(1));
  for (int i = 1; i <= m; ++i) {
    g[i - 1][0] = Gen(b.names.size());
    b.names.push_back(prefix + std::to_string(i));
  }
  b.grids[prefix] = g;
  Presentation p = finish("Affine(" + std::to_string(m) + ")", b);
  const Alphabet* al = p.alphabet.get();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      NCPoly xi = NCPoly::gen(Gen(i), al), xj = NCPoly::gen(Gen(j), al);
      // x_i x_j = q^{-1} x_j x_i
      p.relations.push_back(xj * xi - RatQ::q(1) * (xi * xj));
    }
  return AlgebraHandle(std::move(p));
}

AlgebraHandle q_grassmann(int n, const std::string& prefix) {
  Builder b;
  Grid g(n, std::vector<Gen>(1));
  for (int i = 1; i <= n; ++i) {
    g[i - 1][0] = Gen(b.names.size());
    b.names.push_back(prefix + std::to_string(i));
  }
  b.grids[prefix] = g;
  Presentation p = finish("Grassmann(" + std::to_string(n) + ")", b);
  const Alphabet* al = p.alphabet.get();
  for (int i = 0; i < n; ++i) {
    NCPoly pi = NCPoly::gen(Gen(i), al);
    p.relations.push_back(pi * pi);
    for (int j = i + 1; j < n; ++j) {
      NCPoly pj = NCPoly::gen(Gen(j), al);
      // psi_i psi_j = -q psi_j psi_i
      p.relations.push_back(pj * pi + RatQ::q(-1) * (pi * pj));
    }
  }
  return AlgebraHandle(std::move(p));
}

AlgebraHandle free_algebra(const std::vector<std::string>& names) {
  Builder b;
  b.names = names;
  return AlgebraHandle(finish("Free(" + std::to_string(names.size()) + ")", b));
}

AlgebraHandle free_matrix(int n, int m, const std::string& prefix) {
  Builder b;
  b.add_grid(grid_name(prefix), prefix, n, m);
  return AlgebraHandle(
      finish("FreeMat(" + std::to_string(n) + "," + std::to_string(m) + ")", b));
}

AlgebraHandle custom(const std::string& name, const std::vector<std::string>& gens,
                     const std::vector<NCPoly>& rels) {
  Builder b;
  b.names = gens;
  Presentation p = finish(name, b);
  for (auto& r : rels) p.relations.push_back(r.relabel(
      [&] {
        std::vector<Gen> id(gens.size());
        for (size_t i = 0; i < gens.size(); ++i) id[i] = Gen(i);
        return id;
      }(),
      p.alphabet.get()));
  return AlgebraHandle(std::move(p));
}

AlgebraHandle tensor_product(const AlgebraHandle& A, const AlgebraHandle& B, bool commuting) {
  Builder b;
  const Alphabet* a = A.alphabet();
  const Alphabet* bb = B.alphabet();
  b.names = a->names();
  std::vector<Gen> mapA(a->size()), mapB(bb->size());
  for (size_t i = 0; i < a->size(); ++i) mapA[i] = Gen(i);
  for (size_t i = 0; i < bb->size(); ++i) {
    std::string nm = bb->name(i);
    int k = 2;
    while (std::find(b.names.begin(), b.names.end(), nm) != b.names.end())
      nm = bb->name(i) + "_" + std::to_string(k++);
    mapB[i] = Gen(b.names.size());
    b.names.push_back(nm);
  }
  for (auto& [gn, g] : A.presentation().grids) b.grids[gn] = g;
  for (auto& [gn, g] : B.presentation().grids) {
    std::string nm = gn;
    int k = 2;
    while (b.grids.count(nm)) nm = gn + "_" + std::to_string(k++);
    Grid h = g;
    for (auto& row : h)
      for (auto& x : row) x = mapB[x];
    b.grids[nm] = h;
  }
  Presentation p = finish(A.name() + (commuting ? "(x)" : "*") + B.name(), b);
  const Alphabet* al = p.alphabet.get();
  for (auto& r : A.presentation().relations) p.relations.push_back(r.relabel(mapA, al));
  for (auto& r : B.presentation().relations) p.relations.push_back(r.relabel(mapB, al));
  for (size_t i = 0; commuting && i < a->size(); ++i)
    for (size_t j = 0; j < bb->size(); ++j) {
      NCPoly x = NCPoly::gen(mapA[i], al), y = NCPoly::gen(mapB[j], al);
      p.relations.push_back(y * x - x * y);
    }
  return AlgebraHandle(std::move(p));
}

AlgebraHandle add_relations(const AlgebraHandle& A, const std::string& name,
                            const std::vector<NCPoly>& rels) {
  Presentation p = A.presentation();
  auto al = std::make_shared<Alphabet>(p.alphabet->names());
  std::vector<Gen> id(al->size());
  for (size_t i = 0; i < id.size(); ++i) id[i] = Gen(i);
  std::vector<NCPoly> all;
  for (auto& r : p.relations) all.push_back(r.relabel(id, al.get()));
  for (auto& r : rels) all.push_back(r.relabel(id, al.get()));
  p.alphabet = al;
  p.relations = std::move(all);
  p.name = name;
  return AlgebraHandle(std::move(p));
}

AlgebraHandle localize(const AlgebraHandle& A, const std::vector<NCPoly>& elements,
                       const std::vector<std::string>& names, Side side) {
  if (elements.size() != names.size()) throw std::invalid_argument("localize: names");
  Presentation p = A.presentation();
  std::vector<std::string> gens = p.alphabet->names();
  size_t base = gens.size();
  for (auto& n : names) gens.push_back(n);
  auto al = std::make_shared<Alphabet>(gens);
  std::vector<Gen> id(base);
  for (size_t i = 0; i < base; ++i) id[i] = Gen(i);
  std::vector<NCPoly> rels;
  for (auto& r : p.relations) rels.push_back(r.relabel(id, al.get()));
  NCPoly one(RatQ(1), al.get());
  for (size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].is_zero()) throw std::invalid_argument("localize: zero element");
    NCPoly e = elements[k].relabel(id, al.get());
    NCPoly u = NCPoly::gen(Gen(base + k), al.get());
    if (side != Side::right) rels.push_back(u * e - one);
    if (side != Side::left) rels.push_back(e * u - one);
  }
  p.alphabet = al;
  p.relations = std::move(rels);
  p.name = A.name() + "[loc]";
  return AlgebraHandle(std::move(p));
}

AlgebraHandle localize_matrix(const AlgebraHandle& A, const std::string& grid,
                              const std::string& inv_grid, Side side) {
  Presentation p = A.presentation();
  const Grid& g = p.grids.at(grid);
  int n = int(g.size());
  if (n == 0 || int(g[0].size()) != n) throw std::invalid_argument("localize: non-square grid");
  std::vector<std::string> gens = p.alphabet->names();
  size_t base = gens.size();
  Grid inv(n, std::vector<Gen>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      inv[i - 1][j - 1] = Gen(gens.size());
      gens.push_back(matrix_entry_name(inv_grid, n, n, i, j));
    }
  auto al = std::make_shared<Alphabet>(gens);
  std::vector<Gen> id(base);
  for (size_t i = 0; i < base; ++i) id[i] = Gen(i);
  std::vector<NCPoly> rels;
  for (auto& r : p.relations) rels.push_back(r.relabel(id, al.get()));
  auto M = [&](int i, int j) { return NCPoly::gen(g[i - 1][j - 1], al.get()); };
  auto U = [&](int i, int j) { return NCPoly::gen(inv[i - 1][j - 1], al.get()); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly delta(RatQ(i == j ? 1 : 0), al.get());
      if (side != Side::right) {
        NCPoly s(RatQ(), al.get());
        for (int k = 1; k <= n; ++k) s += U(i, k) * M(k, j);
        rels.push_back(s - delta);
      }
      if (side != Side::left) {
        NCPoly s(RatQ(), al.get());
        for (int k = 1; k <= n; ++k) s += M(i, k) * U(k, j);
        rels.push_back(s - delta);
      }
    }
  p.alphabet = al;
  p.relations = std::move(rels);
  p.grids[inv_grid] = inv;
  p.name = A.name() + "[" + inv_grid + "]";
  return AlgebraHandle(std::move(p));
}

NCPoly transport(const NCPoly& p, const AlgebraHandle& target,
                 const std::map<std::string, std::string>& rename) {
  const Alphabet* src = p.alphabet();
  if (!src) {
    NCPoly r = p;
    r.set_alphabet(target.alphabet());
    return r;
  }
  std::vector<Gen> map(src->size());
  for (size_t i = 0; i < src->size(); ++i) {
    std::string nm = src->name(i);
    auto it = rename.find(nm);
    if (it != rename.end()) nm = it->second;
    int k = target.alphabet()->find(nm);
    map[i] = k < 0 ? Gen(0xFFFF) : Gen(k);
  }
  for (auto& [w, c] : p.terms())
    for (Gen g : w)
      if (map[g] == Gen(0xFFFF))
        throw std::invalid_argument("transport: generator " + src->name(g) + " missing");
  return p.relabel(map, target.alphabet());
}

}  // namespace qm
