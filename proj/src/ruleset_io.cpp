#include "qmanin/ruleset_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qmanin/scalars_json.hpp"

namespace qm {

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string cache_key(const std::string& presentation_hash, int degree) {
  return fnv1a_hex(presentation_hash + "|deglex|" + std::to_string(degree));
}

namespace {

json word_json(const Word& w) {
  json a = json::array();
  for (Gen g : w) a.push_back(int(g));
  return a;
}

Word word_from(const json& j, size_t nalpha) {
  Word w;
  for (auto& x : j) {
    int g = x.get<int>();
    if (g < 0 || size_t(g) >= nalpha) throw std::runtime_error("ruleset: generator id out of range");
    w.push_back(Gen(g));
  }
  return w;
}

}  // namespace

std::string serialize_ruleset(const RuleSet& rs, const CompletionStats& st) {
  json j;
  j["schema_version"] = kRuleSetSchema;
  j["alphabet"] = rs.alphabet()->names();
  j["order"] = "deglex";
  j["completion_degree"] = rs.completion_degree();
  j["presentation_hash"] = rs.presentation_hash();
  j["confluent"] = st.confluent;
  j["pairs_dropped"] = st.pairs_dropped;
  json rules = json::array();
  for (auto& r : rs.rules()) {
    json tail = json::array();
    for (auto& [w, c] : r.tail.terms()) tail.push_back(json::array({to_json(c), word_json(w)}));
    rules.push_back({{"lead", word_json(r.lead)}, {"tail", tail}});
  }
  j["rules"] = rules;
  return j.dump(1);
}

RuleSet parse_ruleset(const std::string& text, const Alphabet* alphabet, CompletionStats* st) {
  json j = json::parse(text);
  if (j.at("schema_version").get<int>() != kRuleSetSchema)
    throw std::runtime_error("ruleset: unsupported schema version");
  if (j.at("order").get<std::string>() != "deglex") throw std::runtime_error("ruleset: order");
  if (j.at("alphabet").get<std::vector<std::string>>() != alphabet->names())
    throw std::runtime_error("ruleset: alphabet mismatch");
  size_t na = alphabet->size();
  std::vector<RewriteRule> rules;
  for (auto& r : j.at("rules")) {
    RewriteRule rr;
    rr.lead = word_from(r.at("lead"), na);
    std::vector<NCPoly::Term> terms;
    for (auto& t : r.at("tail")) terms.emplace_back(word_from(t.at(1), na), ratq_from_json(t.at(0)));
    rr.tail = NCPoly::from_terms(std::move(terms), alphabet);
    rules.push_back(std::move(rr));
  }
  if (st) {
    st->confluent = j.value("confluent", false);
    st->pairs_dropped = j.value("pairs_dropped", size_t(0));
  }
  return RuleSet(alphabet, std::move(rules), j.at("completion_degree").get<int>(),
                 j.value("presentation_hash", std::string()));
}

void save_ruleset(const std::string& path, const RuleSet& rs, const CompletionStats& st) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << serialize_ruleset(rs, st);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot write " + path);
}

RuleSet load_ruleset(const std::string& path, const Alphabet* alphabet,
                     const std::string& presentation_hash, int degree, CompletionStats* st) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  RuleSet rs = parse_ruleset(ss.str(), alphabet, st);
  if (rs.presentation_hash() != presentation_hash || rs.completion_degree() != degree)
    throw std::runtime_error("ruleset: stale cache entry");
  return rs;
}

}  // namespace qm
