#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpt/embedding.hpp"

namespace lpt {

// Partially embedded level graph: a fixed rotation of the subgraph H, given over G's edge ids.
struct PegInstance {
  LevelGraph graph;
  std::vector<int> subgraph_edges;
  RotationSystem subgraph_rotation;  // per vertex of G, only H edges
};

// Constrained level graph: each pair (u, v) demands u left of v on their common level.
struct ClgInstance {
  LevelGraph graph;
  std::vector<std::pair<int, int>> pairs;
};

// Simultaneous level planarity: a shared graph plus exclusive edges of the two input graphs.
struct SefeInstance {
  LevelGraph shared;
  std::vector<std::pair<int, int>> exclusive[2];  // (tail, head) vertex indices
};

struct Verdict {
  bool sat = false;
  std::optional<RotationSystem> embedding;  // embedding of the (shared) graph
  std::optional<LevelDrawing> drawing;      // constrained problems
  std::optional<RotationSystem> augmented[2];  // simultaneous problems, over sefe_graph(s, i)
  std::string reason;
};

// The shared graph plus the exclusive edges of side i, appended after the shared edges.
LevelGraph sefe_graph(const SefeInstance& s, int side);

// Independent witness checks.
bool extends_partial(const PegInstance& p, const RotationSystem& r);
bool respects_orders(const ClgInstance& c, const LevelDrawing& d);
bool verify_simultaneous(const SefeInstance& s, const RotationSystem& first, const RotationSystem& second);

// Same cyclic order of the kept edges around every vertex.
bool same_restriction(const RotationSystem& a, const RotationSystem& b, const std::vector<char>& keep);

// Throws InputError when an instance is malformed.
void check_instance(const PegInstance& p);
void check_instance(const ClgInstance& c);
void check_instance(const SefeInstance& s);

}  // namespace lpt
