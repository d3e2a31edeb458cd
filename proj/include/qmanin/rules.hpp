#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qmanin/ncpoly.hpp"

namespace qm {

struct RewriteRule {
  Word lead;
  NCPoly tail;  // lead -> tail; lead - tail lies in the ideal
  NCPoly as_poly(const Alphabet* a) const {
    return NCPoly::monomial(lead, RatQ(1), a) - tail;
  }
};

// One rewriting step: p -= coef * left * (lead - tail) * right.
struct TraceStep {
  Word left;
  int rule;
  Word right;
  RatQ coef;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
};

class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(const Alphabet* a, std::vector<RewriteRule> rules, int degree, std::string hash);

  const Alphabet* alphabet() const { return alpha_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int completion_degree() const { return degree_; }
  const std::string& presentation_hash() const { return hash_; }
  size_t size() const { return rules_.size(); }
  bool inter_reduced() const;

  // Leftmost factor of w that is a rule lead; returns rule index or -1.
  int match(const Word& w, size_t* pos) const;
  bool reducible(const Word& w) const {
    size_t p;
    return match(w, &p) >= 0;
  }

 private:
  void build_index();
  const Alphabet* alpha_ = nullptr;
  std::vector<RewriteRule> rules_;
  int degree_ = 0;
  std::string hash_;
  std::vector<size_t> lengths_;
  std::unordered_map<Word, int> index_;
};

// Normal form: repeatedly rewrites the largest reducible word at its leftmost match.
NCPoly reduce(const NCPoly& p, const RuleSet& rules, ReductionTrace* trace = nullptr);

// Checks p - sum(coef * left * (lead - tail) * right) == expected.
bool replay_trace(const NCPoly& p, const ReductionTrace& trace, const RuleSet& rules,
                  const NCPoly& expected);

enum class Membership { Proved, Inconclusive };

struct MembershipResult {
  Membership status;
  int degree;
  NCPoly normal_form;
  ReductionTrace trace;
};

MembershipResult is_zero_mod(const NCPoly& p, const RuleSet& rules);

// Number of words of the given length not divisible by any lead.
uint64_t count_normal_words(const RuleSet& rules, size_t alphabet_size, int length);

}  // namespace qm
