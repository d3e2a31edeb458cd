#include "qmanin/spec_io.hpp"

#include <fstream>

#include "qmanin/expr.hpp"

namespace qm {

using nlohmann::json;

namespace {

int int_param(const json& p, const char* key, int fallback = -1) {
  if (!p.contains(key)) {
    if (fallback < 0) throw SpecError(std::string("algebra spec: missing parameter ") + key);
    return fallback;
  }
  if (!p.at(key).is_number_integer() || p.at(key).get<int>() < 1)
    throw SpecError(std::string("algebra spec: parameter ") + key + " must be a positive integer");
  return p.at(key).get<int>();
}

std::string str_param(const json& p, const char* key, const std::string& fallback) {
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_string()) throw SpecError(std::string("algebra spec: ") + key + " must be a string");
  return p.at(key).get<std::string>();
}

Side side_param(const json& p) {
  std::string s = str_param(p, "side", "both");
  if (s == "both") return Side::both;
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw SpecError("algebra spec: side must be both, left or right");
}

std::vector<std::string> strings(const json& p, const char* key) {
  std::vector<std::string> out;
  if (!p.contains(key)) return out;
  if (!p.at(key).is_array()) throw SpecError(std::string("algebra spec: ") + key + " must be an array");
  for (auto& x : p.at(key)) {
    if (!x.is_string()) throw SpecError(std::string("algebra spec: ") + key + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<NCPoly> parse_all(const std::vector<std::string>& texts, const AlgebraHandle& A) {
  std::vector<NCPoly> out;
  for (auto& t : texts) out.push_back(parse_expr(t, A.alphabet()));
  return out;
}

AlgebraHandle preset(const std::string& name, const json& p) {
  if (name == "rq") {
    int n = int_param(p, "n");
    return right_quantum(n, int_param(p, "m", n), str_param(p, "prefix", ""));
  }
  if (name == "funq") return quantum_matrices(int_param(p, "n"), str_param(p, "prefix", ""));
  if (name == "affine") return quantum_affine(int_param(p, "m"), str_param(p, "prefix", "x"));
  if (name == "grassmann") return q_grassmann(int_param(p, "n"), str_param(p, "prefix", "psi"));
  if (name == "free") {
    if (p.contains("generators")) return free_algebra(strings(p, "generators"));
    int n = int_param(p, "n");
    return free_matrix(n, int_param(p, "m", n), str_param(p, "prefix", ""));
  }
  if (name == "custom") {
    auto gens = strings(p, "generators");
    if (gens.empty()) throw SpecError("algebra spec: custom needs generators");
    return custom(str_param(p, "name", "Custom"), gens, {});
  }
  if (name == "tensor") {
    if (!p.contains("factors") || !p.at("factors").is_array() || p.at("factors").size() < 2)
      throw SpecError("algebra spec: tensor needs at least two factors");
    bool commuting = p.value("commuting", true);
    AlgebraHandle acc = algebra_from_json(p.at("factors")[0]);
    for (size_t k = 1; k < p.at("factors").size(); ++k)
      acc = tensor_product(acc, algebra_from_json(p.at("factors")[k]), commuting);
    return acc;
  }
  if (name == "localize") {
    if (!p.contains("base")) throw SpecError("algebra spec: localize needs a base");
    AlgebraHandle base = algebra_from_json(p.at("base"));
    if (p.contains("elements")) {
      auto names = strings(p, "names");
      auto elems = parse_all(strings(p, "elements"), base);
      if (names.size() != elems.size()) throw SpecError("algebra spec: elements and names differ in length");
      return localize(base, elems, names, side_param(p));
    }
    std::string grid = str_param(p, "grid", "M");
    if (!base.has_grid(grid)) throw SpecError("algebra spec: no generator matrix " + grid);
    return localize_matrix(base, grid, str_param(p, "inverse", "U"), side_param(p));
  }
  throw SpecError("algebra spec: unknown preset " + name);
}

}  // namespace

AlgebraHandle algebra_from_json(const json& spec) {
  if (!spec.is_object() || !spec.contains("preset") || !spec.at("preset").is_string())
    throw SpecError("algebra spec: expected an object with a preset");
  json params = spec.value("params", json::object());
  AlgebraHandle A = preset(spec.at("preset").get<std::string>(), params);
  auto rels = strings(spec, "relations");
  if (rels.empty()) return A;
  return add_relations(A, spec.value("name", A.name() + "+rel"), parse_all(rels, A));
}

MatrixFile matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) throw SpecError("matrix file: missing entries");
  const json& e = j.at("entries");
  if (!e.is_array() || e.empty() || !e[0].is_array()) throw SpecError("matrix file: entries must be rows");
  size_t rows = j.value("rows", e.size()), cols = j.value("cols", e[0].size());
  if (e.size() != rows) throw SpecError("matrix file: row count mismatch");
  for (auto& r : e)
    if (!r.is_array() || r.size() != cols) throw SpecError("matrix file: column count mismatch");
  MatrixFile out;
  json spec = j.value("algebra", json("free"));
  if (spec.is_string())
    spec = json{{"preset", spec}, {"params", {{"n", rows}, {"m", cols}}}};
  out.algebra = algebra_from_json(spec);
  out.matrix = NCMatrix(rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) {
      if (!e[r][c].is_string()) throw SpecError("matrix file: entries must be expression strings");
      out.matrix(r + 1, c + 1) = parse_expr(e[r][c].get<std::string>(), out.algebra.alphabet());
    }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw SpecError(path + ": " + err.what());
  }
}

}  // namespace qm
