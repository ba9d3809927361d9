#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpt {

// Malformed input or a violated precondition. Distinct from a negative verdict.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string id;
  int level = 1;
  int demand = 1;
};

struct Edge {
  int tail = -1;
  int head = -1;
};

// Directed graph with a level and a demand per vertex. Every edge goes strictly upward.
class LevelGraph {
 public:
  int add_vertex(std::string id, int level, std::optional<int> demand = std::nullopt);
  int add_edge(int tail, int head);
  int add_edge(std::string_view tail, std::string_view head);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int level(int v) const { return vertices_[v].level; }
  int demand(int v) const { return vertices_[v].demand; }
  const std::string& id(int v) const { return vertices_[v].id; }
  int other(int e, int v) const { return edges_[e].tail == v ? edges_[e].head : edges_[e].tail; }
  int in_degree(int v) const { return in_degree_[v]; }
  int out_degree(int v) const { return static_cast<int>(incident_[v].size()) - in_degree_[v]; }

  std::optional<int> find_vertex(std::string_view id) const;
  int vertex_index(std::string_view id) const;  // throws InputError when unknown
  std::optional<int> find_edge(int a, int b) const;  // either direction

  int max_level() const;
  int min_level() const;
  int max_demand() const;
  std::vector<int> sources() const;
  std::vector<int> sinks() const;
  // The unique source; throws InputError otherwise.
  int source() const;
  // The unique vertex of maximum level, if there is exactly one.
  std::optional<int> unique_apex() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> in_degree_;
  std::unordered_map<std::string, int> index_;
};

struct Diagnostics {
  bool single_source = false;
  bool biconnected = false;
  bool unique_apex = false;
  bool has_st_edge = false;
  bool proper = false;
  bool simple = false;
  bool demands_bounded = false;
  std::vector<std::string> sources;           // all sources found
  std::vector<std::string> cut_vertices;      // articulation points, or "disconnected"
  std::vector<std::string> apices;            // all vertices on the maximum level
  std::vector<std::string> long_edges;        // "u->v" spanning more than one level
  std::vector<std::string> duplicate_edges;   // repeated vertex pairs
  std::vector<std::string> demand_violations; // vertices whose demand reaches the apex level

  // True when the graph is a legal input for LP-tree construction.
  bool ok() const {
    return single_source && biconnected && unique_apex && has_st_edge && simple && demands_bounded;
  }
};

Diagnostics validate(const LevelGraph& g);

// True when the underlying undirected graph is connected and has no cut vertex.
bool is_biconnected(const LevelGraph& g);

// Adds t on level d(V)+1 with demand d(V)+1, edges from every top-level vertex to t, and (s,t).
// The new vertex is the last vertex and the new edges are appended after the original ones.
LevelGraph add_super_sink(const LevelGraph& g);

struct Properization {
  LevelGraph graph;
  // Per original edge: the properized vertices along it, tail first, head last.
  std::vector<std::vector<int>> chain;
  // Per properized vertex: the original vertex, or -1 for a dummy.
  std::vector<int> original_vertex;
  // Per properized vertex: the original edge a dummy subdivides, or -1.
  std::vector<int> dummy_edge;
};

// Subdivides long edges with dummies. Original vertices keep their indices; dummies follow in
// edge order, bottom-up along each edge.
Properization properize(const LevelGraph& g);

}  // namespace lpt
