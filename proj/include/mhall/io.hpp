#pragma once

#include <string>

#include <json.hpp>

#include "mhall/matroid.hpp"

namespace mhall {

// One document per matroid. Accepted payloads:
//   {"ground": ["*","1",...], "flats": [["*"], ...]}
//   {"ground": ["*","1",...], "bases": [["1"], ...]}
//   {"graph": {"vertices": [...], "edges": [{"name": "e", "ends": ["u","v"]}, ...],
//              "loop": "e0"}}
PointedMatroid matroid_from_json(const nlohmann::json& doc);
nlohmann::json matroid_to_json(const PointedMatroid& m);

// Named fixtures: zero, a, b, u_<r>_<n>, free_<n>, and +-sums of those
// (e.g. "a+b"). Anything else is treated as a file path.
bool is_fixture_name(const std::string& name);
PointedMatroid fixture(const std::string& name);

// Fixture name or path to a JSON document.
PointedMatroid load_matroid(const std::string& name_or_path);

}  // namespace mhall
