#pragma once

#include <json.hpp>

#include "napgeo/theorems.hpp"

namespace napgeo {

// JSON encodings used by reports. Scalars never appear as floats:
//   Rat   -> "num/den" or "num"
//   F3    -> {"a": Rat, "b": Rat}
//   Point -> {"x": F3, "y": F3}
//   Circle -> {"center": Point, "r2": F3}
nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const F3& x);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const Circle& k);

// Keyed by point label ("A1", "B1p", "Astarstar", ...) plus "K1".."K3".
nlohmann::json to_json(const NapoleonBundle& b);

// Signed areas plus the derived quantities "cevian_length2" (AA1^2) and
// "four_second_sum" (4 (second_outer + second_inner)), when a bundle is given.
nlohmann::json to_json(const AreaLedger& l, const NapoleonBundle* b = nullptr);

nlohmann::json to_json(const CheckResult& r);

// {"input": {"A","B","C"}, "results": [...], "all_passed": bool} with
// "ledger" and "bundle" added when construction succeeded.
nlohmann::json to_json(const Report& r);

// Inverses for the scalar and point encodings; throw std::invalid_argument
// on malformed input.
Rat rat_from_json(const nlohmann::json& j);
F3 f3_from_json(const nlohmann::json& j);
Point point_from_json(const nlohmann::json& j);

}  // namespace napgeo
