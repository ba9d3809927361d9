#pragma once

#include <utility>
#include <vector>

namespace lpt::detail {

enum class CompType { Bond, Polygon, Triconnected };

struct SplitComponent {
  CompType type;
  std::vector<int> edges;  // ids < real_edges are input edges, the rest virtual
};

struct TriconnectedResult {
  int real_edges = 0;
  std::vector<std::pair<int, int>> endpoints;  // per edge id, input and virtual
  std::vector<SplitComponent> components;
};

// Triconnected components of a simple biconnected graph with at least three
// vertices, via the path-search method of Hopcroft and Tarjan as corrected by
// Gutwenger and Mutzel. Bonds and polygons sharing a virtual edge are merged.
TriconnectedResult triconnected_components(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace lpt::detail
