#pragma once
#include <json.hpp>
#include <string>

#include "qmanin/algebras.hpp"

namespace qm {

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// {"preset": "rq"|"funq"|"affine"|"grassmann"|"free"|"custom"|"tensor"|"localize", "params": {...},
//  "relations": ["expr", ...]}; extra relations are parsed over the preset's generators.
AlgebraHandle algebra_from_json(const nlohmann::json& spec);

struct MatrixFile {
  AlgebraHandle algebra;
  NCMatrix matrix;
};

// {"algebra": <spec> | "<preset>", "rows": r, "cols": c, "entries": [["expr", ...], ...]}
MatrixFile matrix_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace qm
