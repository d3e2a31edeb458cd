#pragma once
#include <string>

#include "qmanin/completion.hpp"
#include "qmanin/rules.hpp"

namespace qm {

inline constexpr int kRuleSetSchema = 1;

std::string fnv1a_hex(const std::string& s);
// Key of a cached completion: presentation hash, order and degree.
std::string cache_key(const std::string& presentation_hash, int degree);

std::string serialize_ruleset(const RuleSet& rs, const CompletionStats& st);
RuleSet parse_ruleset(const std::string& text, const Alphabet* alphabet,
                      CompletionStats* st = nullptr);

void save_ruleset(const std::string& path, const RuleSet& rs, const CompletionStats& st);
// Throws when the file does not describe this presentation at this degree.
RuleSet load_ruleset(const std::string& path, const Alphabet* alphabet,
                     const std::string& presentation_hash, int degree,
                     CompletionStats* st = nullptr);

}  // namespace qm
