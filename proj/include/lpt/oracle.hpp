#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lpt/embedding.hpp"
#include "lpt/problems.hpp"

namespace lpt {

struct OracleEntry {
  RotationSystem rotation;
  LevelDrawing drawing;
};

// Level-planar embeddings keyed by canonical_form, with one drawing each.
struct EmbeddingSet {
  std::map<std::string, OracleEntry> entries;

  size_t count() const { return entries.size(); }
  bool contains(const std::string& key) const { return entries.count(key) > 0; }
};

constexpr int kDefaultGuard = 10;

// Calls visit for every crossing-free drawing of the properized graph that meets the demand
// condition. When g has the edge (s,t) and a unique apex t, the dummies of (s,t) are pinned to
// the leftmost slot of their levels. Throws InputError above the vertex guard.
void for_each_level_planar_drawing(const LevelGraph& g, int guard,
                                   const std::function<void(const LevelDrawing&, const RotationSystem&)>& visit);

EmbeddingSet brute_force_embeddings(const LevelGraph& g, int guard = kDefaultGuard);

// Exhaustive verdicts over oracle embeddings.
Verdict brute_force_verdict(const PegInstance& p, int guard = kDefaultGuard);
Verdict brute_force_verdict(const ClgInstance& c, int guard = kDefaultGuard);
Verdict brute_force_verdict(const SefeInstance& s, int guard = kDefaultGuard);

}  // namespace lpt
