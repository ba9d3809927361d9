#include "lpt/level_graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lpt {

int LevelGraph::add_vertex(std::string id, int level, std::optional<int> demand) {
  if (level < 1) throw InputError("vertex '" + id + "' has non-positive level");
  int d = demand.value_or(level);
  if (d < level) throw InputError("vertex '" + id + "' has demand below its level");
  if (index_.count(id)) throw InputError("duplicate vertex id '" + id + "'");
  int v = vertex_count();
  index_.emplace(id, v);
  vertices_.push_back({std::move(id), level, d});
  incident_.emplace_back();
  in_degree_.push_back(0);
  return v;
}

int LevelGraph::add_edge(int tail, int head) {
  if (tail < 0 || head < 0 || tail >= vertex_count() || head >= vertex_count())
    throw InputError("edge endpoint out of range");
  if (level(tail) >= level(head))
    throw InputError("edge " + id(tail) + "->" + id(head) + " does not go to a higher level");
  int e = edge_count();
  edges_.push_back({tail, head});
  incident_[tail].push_back(e);
  incident_[head].push_back(e);
  ++in_degree_[head];
  return e;
}

int LevelGraph::add_edge(std::string_view tail, std::string_view head) {
  return add_edge(vertex_index(tail), vertex_index(head));
}

std::optional<int> LevelGraph::find_vertex(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int LevelGraph::vertex_index(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw InputError("unknown vertex '" + std::string(id) + "'");
  return *v;
}

std::optional<int> LevelGraph::find_edge(int a, int b) const {
  const auto& inc = incident_[a].size() <= incident_[b].size() ? incident_[a] : incident_[b];
  for (int e : inc) {
    const Edge& ed = edges_[e];
    if ((ed.tail == a && ed.head == b) || (ed.tail == b && ed.head == a)) return e;
  }
  return std::nullopt;
}

int LevelGraph::max_level() const {
  int m = 0;
  for (const auto& v : vertices_) m = std::max(m, v.level);
  return m;
}

int LevelGraph::min_level() const {
  if (vertices_.empty()) return 0;
  int m = vertices_[0].level;
  for (const auto& v : vertices_) m = std::min(m, v.level);
  return m;
}

int LevelGraph::max_demand() const {
  int m = 0;
  for (const auto& v : vertices_) m = std::max(m, v.demand);
  return m;
}

std::vector<int> LevelGraph::sources() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (in_degree_[v] == 0) out.push_back(v);
  return out;
}

std::vector<int> LevelGraph::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (out_degree(v) == 0) out.push_back(v);
  return out;
}

int LevelGraph::source() const {
  auto s = sources();
  if (s.size() != 1) throw InputError("graph must have exactly one source");
  return s[0];
}

std::optional<int> LevelGraph::unique_apex() const {
  int k = max_level();
  std::optional<int> apex;
  for (int v = 0; v < vertex_count(); ++v) {
    if (level(v) != k) continue;
    if (apex) return std::nullopt;
    apex = v;
  }
  return apex;
}

namespace {

// Iterative lowpoint DFS. Returns the articulation points; `connected` reports reachability.
std::vector<int> articulation_points(const LevelGraph& g, bool& connected) {
  int n = g.vertex_count();
  std::vector<int> num(n, -1), low(n, 0), parent_edge(n, -1), pos(n, 0);
  std::vector<char> is_cut(n, 0);
  connected = true;
  if (n == 0) return {};
  int counter = 0, root_children = 0;
  std::vector<int> stack{0};
  num[0] = low[0] = counter++;
  while (!stack.empty()) {
    int v = stack.back();
    const auto& inc = g.incident(v);
    if (pos[v] < static_cast<int>(inc.size())) {
      int e = inc[pos[v]++];
      if (e == parent_edge[v]) continue;
      int w = g.other(e, v);
      if (num[w] < 0) {
        num[w] = low[w] = counter++;
        parent_edge[w] = e;
        stack.push_back(w);
      } else {
        low[v] = std::min(low[v], num[w]);
      }
    } else {
      stack.pop_back();
      if (stack.empty()) break;
      int p = stack.back();
      low[p] = std::min(low[p], low[v]);
      if (p == 0) {
        ++root_children;
      } else if (low[v] >= num[p]) {
        is_cut[p] = 1;
      }
    }
  }
  if (root_children > 1) is_cut[0] = 1;
  if (counter < n) connected = false;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

}  // namespace

bool is_biconnected(const LevelGraph& g) {
  if (g.vertex_count() < 2) return false;
  bool connected = false;
  auto cuts = articulation_points(g, connected);
  return connected && cuts.empty();
}

Diagnostics validate(const LevelGraph& g) {
  Diagnostics d;
  for (int v : g.sources()) d.sources.push_back(g.id(v));
  d.single_source = d.sources.size() == 1;

  bool connected = false;
  auto cuts = articulation_points(g, connected);
  for (int v : cuts) d.cut_vertices.push_back(g.id(v));
  if (!connected) d.cut_vertices.push_back("disconnected");
  d.biconnected = g.vertex_count() >= 2 && connected && cuts.empty();

  int k = g.max_level();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.level(v) == k) d.apices.push_back(g.id(v));
  d.unique_apex = d.apices.size() == 1;

  if (d.single_source && d.unique_apex) {
    int s = g.source();
    int t = *g.unique_apex();
    d.has_st_edge = s != t && g.find_edge(s, t).has_value();
  }

  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges()) {
    if (g.level(e.head) - g.level(e.tail) > 1) d.long_edges.push_back(g.id(e.tail) + "->" + g.id(e.head));
    if (!seen.emplace(e.tail, e.head).second) d.duplicate_edges.push_back(g.id(e.tail) + "->" + g.id(e.head));
  }
  d.proper = d.long_edges.empty();
  d.simple = d.duplicate_edges.empty();

  // With a unique apex t, every other demand must stay strictly below ℓ(t) and t's own demand
  // must equal its level; otherwise t could not serve as the outer apex.
  if (auto t = g.unique_apex()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      bool bad = v == *t ? g.demand(v) != g.level(v) : g.demand(v) >= g.level(*t);
      if (bad) d.demand_violations.push_back(g.id(v));
    }
  }
  d.demands_bounded = d.demand_violations.empty();
  return d;
}

LevelGraph add_super_sink(const LevelGraph& g) {
  int s = g.source();
  int k = g.max_level();
  int top = g.max_demand() + 1;
  LevelGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v.id, v.level, v.demand);
  for (const auto& e : g.edges()) out.add_edge(e.tail, e.head);
  std::string tid = "t";
  while (g.find_vertex(tid)) tid += "'";
  int t = out.add_vertex(tid, top, top);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.level(v) == k && v != s) out.add_edge(v, t);
  out.add_edge(s, t);
  return out;
}

Properization properize(const LevelGraph& g) {
  Properization p;
  for (const auto& v : g.vertices()) p.graph.add_vertex(v.id, v.level, v.demand);
  p.original_vertex.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) p.original_vertex[v] = v;
  p.dummy_edge.assign(g.vertex_count(), -1);
  p.chain.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto& ch = p.chain[e];
    ch.push_back(ed.tail);
    for (int y = g.level(ed.tail) + 1; y < g.level(ed.head); ++y) {
      int dv = p.graph.add_vertex(g.id(ed.tail) + "~" + g.id(ed.head) + "@" + std::to_string(y), y);
      p.original_vertex.push_back(-1);
      p.dummy_edge.push_back(e);
      ch.push_back(dv);
    }
    ch.push_back(ed.head);
    for (size_t i = 0; i + 1 < ch.size(); ++i) p.graph.add_edge(ch[i], ch[i + 1]);
  }
  return p;
}

}  // namespace lpt
