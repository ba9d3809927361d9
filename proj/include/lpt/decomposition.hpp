#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpt/level_graph.hpp"

namespace lpt {

enum class NodeKind { S, P, Q, R };
enum class ArcLabel { Unlabeled, Rigid, Flexible };

const char* kind_name(NodeKind k);
const char* label_name(ArcLabel a);

// An edge of one skeleton. Virtual edges have a twin in the neighboring skeleton;
// real edges carry the index of the graph edge they stand for.
struct SkeletonEdge {
  int u = -1, v = -1;
  int node = -1;
  int twin = -1;
  int real = -1;
  bool alive = true;

  bool is_virtual() const { return twin >= 0; }
};

struct TreeNode {
  NodeKind kind = NodeKind::R;
  std::vector<int> edges;  // may hold stale ids; use DecompositionTree::skeleton
  int parent = -1;
  int parent_edge = -1;  // skeleton edge of this node whose twin lies in the parent
  ArcLabel label = ArcLabel::Unlabeled;  // label of the arc (parent, this)
  bool alive = true;
};

class DecompositionTree {
 public:
  std::vector<SkeletonEdge> edges;
  std::vector<TreeNode> nodes;
  int root = -1;

  int add_node(NodeKind kind);
  int add_edge(int node, int u, int v, int real = -1);
  void make_twins(int a, int b);

  // Live edges of a node's skeleton.
  std::vector<int> skeleton(int node) const;
  std::vector<int> skeleton_vertices(int node) const;
  // Child nodes in skeleton edge order, paired with the child virtual edge of `node`.
  std::vector<std::pair<int, int>> children(int node) const;
  // Node on the other side of a virtual edge.
  int neighbor(int edge) const { return edges[edges[edge].twin].node; }
  // Poles of a node: endpoints of its parent edge (or of the root's real edge),
  // lower level first, ties by vertex index.
  std::pair<int, int> poles(int node, const LevelGraph& g) const;
  // Live nodes, every parent before its children.
  std::vector<int> top_down() const;
  int live_nodes() const;
  int live_arcs() const { return live_nodes() - 1; }

  // Roots the tree at `r` by setting parent pointers.
  void reroot(int r);
  // Merges `child` into its parent; the merged node keeps the parent's id and kind.
  int contract(int child);
  // Splits P-node `p` so that a new node holds its parent edge, child edge `e_max`
  // and a link to `p`, which keeps the remaining children. With only two
  // children the node is relabeled R instead. Returns the node now holding `e_max`.
  int split(int p, int e_max);
  // Drops stale ids from the nodes' edge lists.
  void compact();
};

// SPQR-tree with explicit Q-nodes, rooted at the Q-node of (s,t).
DecompositionTree build_spqr(const LevelGraph& g);

// Subgraph of G that virtual edge `ve` stands for, with the original vertex ids.
LevelGraph expansion_graph(const LevelGraph& g, const DecompositionTree& t, int ve);
// Graph edge indices of G(ve).
std::vector<int> expansion_edges(const DecompositionTree& t, int ve);

// Height d(mu) per node id: the largest demand of a vertex of G(mu) other than the
// poles; the level of the lower endpoint for Q-nodes. -1 for dead nodes.
std::vector<int> compute_heights(const DecompositionTree& t, const LevelGraph& g);

DecompositionTree contract_arc(const DecompositionTree& t, int child);
// Throws InputError unless `p` is a P-node and `e_max` a child edge of maximal height.
DecompositionTree split_p_node(const DecompositionTree& t, const LevelGraph& g, int p, int e_max);

struct TreeCheck {
  bool ok = true;
  std::vector<std::string> problems;
};
TreeCheck validate_tree(const DecompositionTree& t, const LevelGraph& g);

// Brute-force triconnectivity test of a skeleton multigraph (no two vertices separate it).
bool skeleton_triconnected(const DecompositionTree& t, int node);

}  // namespace lpt
