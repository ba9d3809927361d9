#include "lpt/problems.hpp"

#include <algorithm>
#include <set>

namespace lpt {

LevelGraph sefe_graph(const SefeInstance& s, int side) {
  LevelGraph g = s.shared;
  for (auto [a, b] : s.exclusive[side]) g.add_edge(a, b);
  return g;
}

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  size_t off = it - b.begin();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}

}  // namespace

bool same_restriction(const RotationSystem& a, const RotationSystem& b, const std::vector<char>& keep) {
  if (a.rotation.size() != b.rotation.size()) return false;
  RotationSystem ra = restrict_rotation(a, keep), rb = restrict_rotation(b, keep);
  for (size_t v = 0; v < ra.rotation.size(); ++v)
    if (!cyclic_equal(ra.rotation[v], rb.rotation[v])) return false;
  return true;
}

bool extends_partial(const PegInstance& p, const RotationSystem& r) {
  std::vector<char> keep(p.graph.edge_count(), 0);
  for (int e : p.subgraph_edges) keep[e] = 1;
  return same_restriction(r, p.subgraph_rotation, keep);
}

bool respects_orders(const ClgInstance& c, const LevelDrawing& d) {
  std::vector<int> pos(c.graph.vertex_count(), -1);
  for (const auto& lvl : d.levels)
    for (int i = 0; i < static_cast<int>(lvl.size()); ++i)
      if (lvl[i] < c.graph.vertex_count()) pos[lvl[i]] = i;
  for (auto [u, v] : c.pairs)
    if (pos[u] < 0 || pos[v] < 0 || pos[u] >= pos[v]) return false;
  return true;
}

bool verify_simultaneous(const SefeInstance& s, const RotationSystem& first, const RotationSystem& second) {
  const RotationSystem* emb[2] = {&first, &second};
  for (int i = 0; i < 2; ++i) {
    LevelGraph gi = sefe_graph(s, i);
    try {
      if (!is_level_planar_embedding(gi, *emb[i])) return false;
    } catch (const InputError&) {
      return false;
    }
  }
  // Shared edges carry the same ids in both graphs.
  std::vector<char> keep0(s.shared.edge_count() + s.exclusive[0].size(), 0);
  std::vector<char> keep1(s.shared.edge_count() + s.exclusive[1].size(), 0);
  std::fill(keep0.begin(), keep0.begin() + s.shared.edge_count(), 1);
  std::fill(keep1.begin(), keep1.begin() + s.shared.edge_count(), 1);
  RotationSystem a = restrict_rotation(first, keep0), b = restrict_rotation(second, keep1);
  for (size_t v = 0; v < a.rotation.size(); ++v)
    if (!cyclic_equal(a.rotation[v], b.rotation[v])) return false;
  return true;
}

void check_instance(const PegInstance& p) {
  const LevelGraph& g = p.graph;
  std::vector<char> in_h(g.edge_count(), 0);
  for (int e : p.subgraph_edges) {
    if (e < 0 || e >= g.edge_count()) throw InputError("subgraph edge out of range");
    if (in_h[e]) throw InputError("subgraph edge listed twice");
    in_h[e] = 1;
  }
  if (static_cast<int>(p.subgraph_rotation.rotation.size()) != g.vertex_count())
    throw InputError("subgraph rotation has wrong vertex count");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> listed;
    for (int e : p.subgraph_rotation.rotation[v]) {
      if (e < 0 || e >= g.edge_count() || !in_h[e]) throw InputError("subgraph rotation lists a non-subgraph edge");
      if (g.edge(e).tail != v && g.edge(e).head != v) throw InputError("subgraph rotation lists a non-incident edge");
      if (!listed.insert(e).second) throw InputError("subgraph rotation repeats an edge");
    }
    for (int e : g.incident(v))
      if (in_h[e] && !listed.count(e)) throw InputError("subgraph rotation misses an edge");
  }
}

void check_instance(const ClgInstance& c) {
  for (auto [u, v] : c.pairs) {
    if (u < 0 || v < 0 || u >= c.graph.vertex_count() || v >= c.graph.vertex_count())
      throw InputError("constraint vertex out of range");
    if (u == v) throw InputError("constraint relates a vertex to itself");
    if (c.graph.level(u) != c.graph.level(v)) throw InputError("constrained pair is not on one level");
  }
}

void check_instance(const SefeInstance& s) {
  std::set<std::pair<int, int>> shared;
  for (const auto& e : s.shared.edges()) shared.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head));
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < 2; ++i)
    for (auto [a, b] : s.exclusive[i]) {
      if (a < 0 || b < 0 || a >= s.shared.vertex_count() || b >= s.shared.vertex_count())
        throw InputError("exclusive edge endpoint out of range");
      if (s.shared.level(a) >= s.shared.level(b)) throw InputError("exclusive edge does not go upward");
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      if (shared.count(key)) throw InputError("exclusive edge duplicates a shared edge");
      if (!seen.emplace(key).second) throw InputError("exclusive edge listed twice");
    }
}

}  // namespace lpt
