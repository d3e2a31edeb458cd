#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "qmanin/rules.hpp"

namespace qm {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompletionOptions {
  int max_degree = 4;
  size_t monomial_cap = 10'000'000;
  double time_cap_seconds = 0;  // 0: no cap
  bool parallel = true;         // false selects the serial reference path
};

struct CompletionStats {
  size_t pairs_processed = 0;
  size_t pairs_dropped = 0;  // superposition degree above max_degree
  size_t rules_created = 0;
  int highest_new_lead = 0;  // longest lead created beyond the inputs
  // True when no critical pair was dropped: the returned set is a complete
  // rewriting system, not just a truncation.
  bool confluent = false;
};

RuleSet complete(const std::vector<NCPoly>& relations, const Alphabet* alphabet,
                 const CompletionOptions& opts, const std::string& presentation_hash = "",
                 CompletionStats* stats = nullptr);

}  // namespace qm
