#include "qmanin/completion.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <set>

namespace qm {

namespace {

struct Pair {
  size_t degree;
  Word overlap;
  int i, j;  // rule ids; lead_i = u s, lead_j = s v
  size_t k;  // |s|
  bool operator<(const Pair& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (overlap != o.overlap) return deglex_less(overlap, o.overlap);
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return k < o.k;
  }
};

class Completer {
 public:
  Completer(const Alphabet* a, const CompletionOptions& o)
      : alpha_(a), opts_(o), start_(std::chrono::steady_clock::now()) {}

  void add_polys(std::vector<NCPoly> polys) {
    std::stable_sort(polys.begin(), polys.end(), [](const NCPoly& x, const NCPoly& y) {
      if (x.is_zero() || y.is_zero()) return !x.is_zero() && y.is_zero();
      return deglex_less(x.lead_word(), y.lead_word());
    });
    std::deque<NCPoly> q(polys.begin(), polys.end());
    while (!q.empty()) {
      NCPoly f = reduce_now(q.front());
      q.pop_front();
      if (f.is_zero()) continue;
      f *= f.lead_coeff().inverse();
      RewriteRule r{f.lead_word(), NCPoly::monomial(f.lead_word(), RatQ(1), alpha_) - f};
      r.tail.set_alphabet(alpha_);
      // Retire rules whose leads contain the new lead.
      for (int id : alive_ids()) {
        if (rules_[id].lead.find(r.lead) != Word::npos) {
          q.push_back(rules_[id].as_poly(alpha_));
          kill(id);
        }
      }
      int id = insert(std::move(r));
      make_pairs(id);
      check_budget();
    }
  }

  void run() {
    while (!pairs_.empty()) {
      size_t d = pairs_.begin()->degree;
      std::vector<Pair> batch;
      while (!pairs_.empty() && pairs_.begin()->degree == d) {
        Pair p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        if (alive_[p.i] && alive_[p.j]) batch.push_back(std::move(p));
      }
      std::vector<NCPoly> results(batch.size());
      bool failed = false;
      std::string err;
#pragma omp parallel for schedule(dynamic) if (opts_.parallel)
      for (long b = 0; b < long(batch.size()); ++b) {
        try {
          results[b] = reduce_now(spoly(batch[b]));
        } catch (const std::exception& e) {
#pragma omp critical
          {
            failed = true;
            err = e.what();
          }
        }
      }
      if (failed) throw ResourceError(err);
      stats_.pairs_processed += batch.size();
      std::vector<NCPoly> fresh;
      for (auto& r : results)
        if (!r.is_zero()) fresh.push_back(std::move(r));
      add_polys(std::move(fresh));
    }
  }

  RuleSet finish(const std::string& hash) {
    std::vector<int> ids = alive_ids();
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return deglex_less(rules_[a].lead, rules_[b].lead); });
    std::vector<RewriteRule> out;
    for (int id : ids) {
      RewriteRule r = rules_[id];
      r.tail = reduce_now(r.tail);
      out.push_back(std::move(r));
    }
    stats_.confluent = stats_.pairs_dropped == 0;
    return RuleSet(alpha_, std::move(out), opts_.max_degree, hash);
  }

  CompletionStats stats_;
  size_t input_max_lead_ = 0;

 private:
  std::vector<int> alive_ids() const {
    std::vector<int> v;
    for (size_t i = 0; i < rules_.size(); ++i)
      if (alive_[i]) v.push_back(int(i));
    return v;
  }

  int insert(RewriteRule r) {
    int id = int(rules_.size());
    index_[r.lead] = id;
    ++lengths_[r.lead.size()];
    monomials_ += 1 + r.tail.size();
    if (r.lead.size() > input_max_lead_) stats_.highest_new_lead = int(r.lead.size());
    rules_.push_back(std::move(r));
    alive_.push_back(true);
    ++stats_.rules_created;
    return id;
  }

  void kill(int id) {
    alive_[id] = false;
    index_.erase(rules_[id].lead);
    if (--lengths_[rules_[id].lead.size()] == 0) lengths_.erase(rules_[id].lead.size());
    monomials_ -= 1 + rules_[id].tail.size();
  }

  void make_pairs(int id) {
    for (int other : alive_ids()) {
      add_overlaps(id, other);
      if (other != id) add_overlaps(other, id);
    }
  }

  // suffix of lead_i == prefix of lead_j
  void add_overlaps(int i, int j) {
    const Word& a = rules_[i].lead;
    const Word& b = rules_[j].lead;
    size_t kmax = std::min(a.size(), b.size());
    for (size_t k = 1; k < kmax; ++k) {
      if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
      size_t deg = a.size() + b.size() - k;
      if (int(deg) > opts_.max_degree) {
        ++stats_.pairs_dropped;
        continue;
      }
      pairs_.insert(Pair{deg, a + b.substr(k), i, j, k});
    }
  }

  NCPoly spoly(const Pair& p) const {
    const RewriteRule& ri = rules_[p.i];
    const RewriteRule& rj = rules_[p.j];
    Word u = ri.lead.substr(0, ri.lead.size() - p.k);
    Word v = rj.lead.substr(p.k);
    // (lead_i - tail_i) v - u (lead_j - tail_j)
    return rj.tail.sandwich(u, Word(), RatQ(1)) - ri.tail.sandwich(Word(), v, RatQ(1));
  }

  int match(const Word& w, size_t* pos) const {
    if (lengths_.count(0)) {  // the unit lies in the ideal
      *pos = 0;
      return index_.at(Word());
    }
    for (size_t p = 0; p < w.size(); ++p)
      for (auto& [len, cnt] : lengths_) {
        if (p + len > w.size()) break;
        auto it = index_.find(w.substr(p, len));
        if (it != index_.end()) {
          *pos = p;
          return it->second;
        }
      }
    return -1;
  }

  NCPoly reduce_now(const NCPoly& p) const {
    std::map<Word, RatQ, DeglexGreater> work;
    for (auto& [w, c] : p.terms()) work.emplace(w, c);
    std::vector<NCPoly::Term> out;
    size_t steps = 0;
    while (!work.empty()) {
      auto it = work.begin();
      size_t pos;
      int r = match(it->first, &pos);
      if (r < 0) {
        out.emplace_back(it->first, it->second);
        work.erase(it);
        continue;
      }
      const RewriteRule& rule = rules_[r];
      Word u = it->first.substr(0, pos);
      Word v = it->first.substr(pos + rule.lead.size());
      RatQ c = it->second;
      work.erase(it);
      for (auto& [t, k] : rule.tail.terms()) {
        RatQ add = c * k;
        auto [jt, fresh] = work.emplace(u + t + v, add);
        if (!fresh) {
          jt->second += add;
          if (jt->second.is_zero()) work.erase(jt);
        }
      }
      if (work.size() > opts_.monomial_cap)
        throw ResourceError("completion: monomial cap exceeded during reduction");
      if ((++steps & 4095) == 0) check_time();
    }
    return NCPoly::from_terms(std::move(out), alpha_);
  }

  void check_time() const {
    if (opts_.time_cap_seconds <= 0) return;
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (el > opts_.time_cap_seconds) throw ResourceError("completion: time cap exceeded");
  }

  void check_budget() const {
    if (monomials_ > opts_.monomial_cap)
      throw ResourceError("completion: monomial cap exceeded");
    check_time();
  }

  const Alphabet* alpha_;
  CompletionOptions opts_;
  std::chrono::steady_clock::time_point start_;
  std::vector<RewriteRule> rules_;
  std::vector<bool> alive_;
  std::unordered_map<Word, int> index_;
  std::map<size_t, int> lengths_;
  std::set<Pair> pairs_;
  size_t monomials_ = 0;
};

}  // namespace

RuleSet complete(const std::vector<NCPoly>& relations, const Alphabet* alphabet,
                 const CompletionOptions& opts, const std::string& presentation_hash,
                 CompletionStats* stats) {
  Completer c(alphabet, opts);
  for (auto& r : relations) c.input_max_lead_ = std::max(c.input_max_lead_, r.degree());
  std::vector<NCPoly> rels;
  for (auto& r : relations)
    if (!r.is_zero()) {
      NCPoly x = r;
      x.set_alphabet(alphabet);
      rels.push_back(std::move(x));
    }
  c.add_polys(std::move(rels));
  c.run();
  RuleSet rs = c.finish(presentation_hash);
  if (stats) *stats = c.stats_;
  return rs;
}

}  // namespace qm
