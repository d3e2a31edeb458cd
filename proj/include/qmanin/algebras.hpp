#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qmanin/completion.hpp"
#include "qmanin/matrix.hpp"
#include "qmanin/rules.hpp"

namespace qm {

using Grid = std::vector<std::vector<Gen>>;

struct Presentation {
  std::string name;
  std::shared_ptr<Alphabet> alphabet;  // ids follow generator precedence
  std::vector<NCPoly> relations;
  std::map<std::string, Grid> grids;  // named generator matrices, e.g. "M"
  std::string hash() const;
};

// Completion defaults shared by every handle.
struct EngineConfig {
  size_t monomial_cap = 10'000'000;
  double time_cap_seconds = 0;
  bool parallel = true;
  std::string cache_dir;  // empty: no disk cache; QMANIN_CACHE_DIR overrides
};
EngineConfig& engine_config();
std::string effective_cache_dir();

class AlgebraHandle {
 public:
  AlgebraHandle() = default;
  explicit AlgebraHandle(Presentation p);

  const Presentation& presentation() const { return *pres_; }
  const Alphabet* alphabet() const { return pres_->alphabet.get(); }
  const std::string& name() const { return pres_->name; }
  NCPoly gen(const std::string& name) const;
  NCPoly scalar(const RatQ& c) const { return NCPoly(c, alphabet()); }
  NCPoly one() const { return scalar(RatQ(1)); }
  NCMatrix matrix(const std::string& grid = "M") const;
  bool has_grid(const std::string& g) const { return pres_->grids.count(g) > 0; }

  // Completed rules at exactly this degree (cached per handle and optionally on disk).
  std::shared_ptr<const RuleSet> rules(int degree) const;
  CompletionStats stats(int degree) const;
  MembershipResult prove_zero(const NCPoly& p, int degree) const;
  // True when 1 reduces to 0 (the presented algebra collapsed).
  bool collapsed(int degree) const;

 private:
  struct Cache {
    std::mutex m;
    std::map<int, std::shared_ptr<const RuleSet>> sets;
    std::map<int, CompletionStats> stats;
  };
  std::shared_ptr<Presentation> pres_;
  std::shared_ptr<Cache> cache_;
};

// Generator naming: prefix "" gives a,b,c,d for a 2x2 matrix and M<i><j> otherwise.
AlgebraHandle right_quantum(int n, int m, const std::string& prefix = "");
AlgebraHandle quantum_matrices(int n, const std::string& prefix = "");
AlgebraHandle quantum_affine(int m, const std::string& prefix = "x");
AlgebraHandle q_grassmann(int n, const std::string& prefix = "psi");
AlgebraHandle free_algebra(const std::vector<std::string>& names);
AlgebraHandle free_matrix(int n, int m, const std::string& prefix = "");
// Algebra generated by an n x m matrix subject to the given relation families.
AlgebraHandle custom(const std::string& name, const std::vector<std::string>& gens,
                     const std::vector<NCPoly>& rels_over_own_alphabet);

// commuting = false gives the free product (no cross relations).
AlgebraHandle tensor_product(const AlgebraHandle& A, const AlgebraHandle& B, bool commuting = true);
AlgebraHandle add_relations(const AlgebraHandle& A, const std::string& name,
                            const std::vector<NCPoly>& rels);

enum class Side { both, left, right };  // left: u*e = 1; right: e*u = 1

AlgebraHandle localize(const AlgebraHandle& A, const std::vector<NCPoly>& elements,
                       const std::vector<std::string>& names, Side side = Side::both);
// Adjoins the n^2 entries of an inverse matrix (grid inv_grid).
AlgebraHandle localize_matrix(const AlgebraHandle& A, const std::string& grid,
                              const std::string& inv_grid, Side side = Side::both);

// Maps a polynomial from a factor algebra into a product built from it, by generator name.
NCPoly transport(const NCPoly& p, const AlgebraHandle& target,
                 const std::map<std::string, std::string>& rename = {});

std::string matrix_entry_name(const std::string& prefix, int n, int m, int i, int j);

}  // namespace qm
