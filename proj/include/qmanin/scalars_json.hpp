#pragma once
#include <json.hpp>

#include "qmanin/ratzw.hpp"

namespace qm {

using json = nlohmann::json;

// LaurentQ: [[exponent, "num", "den"], ...] ascending; RatQ/RatZW: {num, den}.
json to_json(const LaurentQ& p);
json to_json(const RatQ& x);
json to_json(const PolyZW& p);
json to_json(const RatZW& x);
LaurentQ laurent_from_json(const json& j);
RatQ ratq_from_json(const json& j);
RatZW ratzw_from_json(const json& j);

}  // namespace qm
