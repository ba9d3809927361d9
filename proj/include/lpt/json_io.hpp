#pragma once

#include <json.hpp>

#include "lpt/problems.hpp"

namespace lpt {

using Json = nlohmann::ordered_json;

LevelGraph graph_from_json(const Json& j);
Json graph_to_json(const LevelGraph& g);

// {"v": ["n1", "n2", ...]} listing neighbor ids counter-clockwise. Vertices in id order.
Json rotation_to_json(const LevelGraph& g, const RotationSystem& r);
RotationSystem rotation_from_json(const LevelGraph& g, const Json& j);

// {"1": ["s"], "2": ["a", "b"], ...} over properized vertex ids.
Json drawing_to_json(const LevelGraph& g, const LevelDrawing& d);
LevelDrawing drawing_from_json(const LevelGraph& g, const Json& j);

// {"graph": ..., "subgraph": [["u","v"],...], "rotation": {...}}
PegInstance peg_from_json(const Json& j);
// {"graph": ..., "pairs": [["u","v"],...]}
ClgInstance clg_from_json(const Json& j);
// {"graph": ..., "exclusive1": [...], "exclusive2": [...]}
SefeInstance sefe_from_json(const Json& j);

}  // namespace lpt
