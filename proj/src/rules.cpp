#include "qmanin/rules.hpp"

#include <algorithm>
#include <map>

namespace qm {

RuleSet::RuleSet(const Alphabet* a, std::vector<RewriteRule> rules, int degree, std::string hash)
    : alpha_(a), rules_(std::move(rules)), degree_(degree), hash_(std::move(hash)) {
  build_index();
}

void RuleSet::build_index() {
  index_.clear();
  lengths_.clear();
  for (size_t i = 0; i < rules_.size(); ++i) {
    index_.emplace(rules_[i].lead, int(i));
    lengths_.push_back(rules_[i].lead.size());
  }
  std::sort(lengths_.begin(), lengths_.end());
  lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
}

bool RuleSet::inter_reduced() const {
  for (size_t i = 0; i < rules_.size(); ++i)
    for (size_t j = 0; j < rules_.size(); ++j)
      if (i != j && rules_[i].lead.find(rules_[j].lead) != Word::npos) return false;
  return true;
}

int RuleSet::match(const Word& w, size_t* pos) const {
  if (index_.empty()) return -1;
  if (lengths_.front() == 0) {  // the unit lies in the ideal
    *pos = 0;
    return index_.at(Word());
  }
  for (size_t p = 0; p < w.size(); ++p) {
    for (size_t len : lengths_) {
      if (p + len > w.size()) break;
      auto it = index_.find(w.substr(p, len));
      if (it != index_.end()) {
        *pos = p;
        return it->second;
      }
    }
  }
  return -1;
}

NCPoly reduce(const NCPoly& p, const RuleSet& rules, ReductionTrace* trace) {
  const Alphabet* al = p.alphabet() ? p.alphabet() : rules.alphabet();
  std::map<Word, RatQ, DeglexGreater> work;
  for (auto& [w, c] : p.terms()) work.emplace(w, c);
  std::vector<NCPoly::Term> out;
  while (!work.empty()) {
    auto it = work.begin();
    size_t pos;
    int r = rules.match(it->first, &pos);
    if (r < 0) {
      out.emplace_back(it->first, it->second);
      work.erase(it);
      continue;
    }
    const RewriteRule& rule = rules.rules()[r];
    Word u = it->first.substr(0, pos);
    Word v = it->first.substr(pos + rule.lead.size());
    RatQ c = it->second;
    work.erase(it);
    if (trace) trace->steps.push_back({u, r, v, c});
    for (auto& [t, k] : rule.tail.terms()) {
      Word nw = u + t + v;
      RatQ add = c * k;
      auto [jt, fresh] = work.emplace(std::move(nw), add);
      if (!fresh) {
        jt->second += add;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  NCPoly res = NCPoly::from_terms(std::move(out), al);
  return res;
}

bool replay_trace(const NCPoly& p, const ReductionTrace& trace, const RuleSet& rules,
                  const NCPoly& expected) {
  const Alphabet* al = p.alphabet() ? p.alphabet() : rules.alphabet();
  std::vector<NCPoly::Term> acc(p.terms().begin(), p.terms().end());
  for (auto& s : trace.steps) {
    if (s.rule < 0 || size_t(s.rule) >= rules.size()) return false;
    const RewriteRule& r = rules.rules()[s.rule];
    acc.emplace_back(s.left + r.lead + s.right, -s.coef);
    for (auto& [t, k] : r.tail.terms()) acc.emplace_back(s.left + t + s.right, s.coef * k);
  }
  NCPoly q = NCPoly::from_terms(std::move(acc), al);
  NCPoly e = expected;
  e.set_alphabet(al);
  return q == e;
}

MembershipResult is_zero_mod(const NCPoly& p, const RuleSet& rules) {
  MembershipResult r;
  r.degree = rules.completion_degree();
  r.normal_form = reduce(p, rules, &r.trace);
  r.status = r.normal_form.is_zero() ? Membership::Proved : Membership::Inconclusive;
  return r;
}

uint64_t count_normal_words(const RuleSet& rules, size_t alphabet_size, int length) {
  size_t keep = 0;
  for (auto& r : rules.rules()) keep = std::max(keep, r.lead.size());
  keep = keep ? keep - 1 : 0;
  std::map<Word, uint64_t> states{{Word(), 1}};
  for (int step = 0; step < length; ++step) {
    std::map<Word, uint64_t> next;
    for (auto& [suf, cnt] : states) {
      for (size_t g = 0; g < alphabet_size; ++g) {
        Word w = suf + Gen(g);
        bool bad = false;
        // only factors ending at the new letter matter
        for (auto& r : rules.rules())
          if (r.lead.size() <= w.size() &&
              w.compare(w.size() - r.lead.size(), r.lead.size(), r.lead) == 0) {
            bad = true;
            break;
          }
        if (bad) continue;
        if (w.size() > keep) w = w.substr(w.size() - keep);
        next[w] += cnt;
      }
    }
    states = std::move(next);
  }
  uint64_t total = 0;
  for (auto& [s, c] : states) total += c;
  return total;
}

}  // namespace qm
