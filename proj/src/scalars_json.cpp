#include "qmanin/scalars_json.hpp"

namespace qm {

json to_json(const LaurentQ& p) {
  json a = json::array();
  for (auto& [e, c] : p.terms())
    a.push_back({e, c.get_num().get_str(), c.get_den().get_str()});
  return a;
}

json to_json(const RatQ& x) { return {{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

json to_json(const PolyZW& p) {
  json a = json::array();
  for (auto& [e, c] : p.terms()) a.push_back({e[0], e[1], to_json(c)});
  return a;
}

json to_json(const RatZW& x) { return {{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

LaurentQ laurent_from_json(const json& j) {
  std::vector<LaurentQ::Term> t;
  for (auto& e : j) {
    Rational c(e.at(1).get<std::string>() + "/" + e.at(2).get<std::string>());
    c.canonicalize();
    t.emplace_back(e.at(0).get<int>(), c);
  }
  return LaurentQ::from_terms(std::move(t));
}

RatQ ratq_from_json(const json& j) {
  return RatQ(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

static PolyZW polyzw_from_json(const json& j) {
  std::vector<PolyZW::Term> t;
  for (auto& e : j) t.push_back({{e.at(0).get<int>(), e.at(1).get<int>()}, ratq_from_json(e.at(2))});
  return PolyZW::from_terms(std::move(t));
}

RatZW ratzw_from_json(const json& j) {
  return RatZW(polyzw_from_json(j.at("num")), polyzw_from_json(j.at("den")));
}

}  // namespace qm
