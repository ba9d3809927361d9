#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lpt/decomposition.hpp"
#include "lpt/embedding.hpp"

namespace lpt {

// The embedding search gave up before trying every candidate.
class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Counter-clockwise order of skeleton edges around each vertex of one skeleton.
struct NodeRotation {
  std::vector<int> verts;              // sorted
  std::vector<std::vector<int>> ccw;   // parallel to verts

  const std::vector<int>* at(int x) const;
  std::vector<int>* at(int x);
};
using SkeletonEmbedding = std::vector<NodeRotation>;  // indexed by node id

// Skeleton embeddings induced by a planar rotation system of G.
SkeletonEmbedding derive_skeleton_embedding(const DecompositionTree& t, const LevelGraph& g, const RotationSystem& r);

// Faces of r flanking G(mu) per node id, and the smaller of their apex levels. Entries are
// -1 for the root and dead nodes.
struct SpaceInfo {
  std::vector<int> face1, face2;
  std::vector<int> space;
};
SpaceInfo compute_spaces(const DecompositionTree& t, const LevelGraph& g, const RotationSystem& r, const FaceSet& faces);
std::vector<int> compute_spaces(const DecompositionTree& t, const LevelGraph& g, const RotationSystem& r);

// Embedding of G obtained by contracting all arcs. `parity[x]` reverses skeleton x;
// `p_order[x]`, when non-empty for a P-node x, lists its child edges counter-clockwise
// around its first pole, right after the parent edge.
RotationSystem expand_embedding(const DecompositionTree& t, const LevelGraph& g, const SkeletonEmbedding& skel,
                                const std::vector<char>& parity, const std::vector<std::vector<int>>& p_order);

// Some planar rotation system of g; throws NotLevelPlanarError when g is not planar.
RotationSystem planar_rotation(const LevelGraph& g);

// Some level-planar embedding of g, found by trying skeleton choices of the SPQR-tree
// around a planar embedding. Throws NotLevelPlanarError when there is none, InputError for
// an invalid graph and SearchBudgetError after `budget` candidates.
RotationSystem reference_embedding(const LevelGraph& g, std::int64_t budget = std::int64_t(1) << 22);

struct ArcRecord {
  int parent = -1, child = -1;
  NodeKind parent_kind = NodeKind::R, child_kind = NodeKind::R;
  int height = 0;
  int space = 0;
  ArcLabel label = ArcLabel::Unlabeled;
};

struct BuildStats {
  int spqr_nodes = 0;
  int spqr_s = 0, spqr_p = 0, spqr_q = 0, spqr_r = 0;
  int p_splits = 0;       // P-nodes that lost a tall child to a new R-node
  int p_conversions = 0;  // two-child P-nodes relabeled R
  int rs_contractions = 0;
  int rigid_arcs = 0;
  int flexible_arcs = 0;
  int final_nodes = 0;
  int final_s = 0, final_p = 0, final_q = 0, final_r = 0;
  long long skeleton_size = 0;  // skeleton edges over all non-Q nodes of the final tree
};

struct LpTree {
  LevelGraph graph;
  RotationSystem reference;
  DecompositionTree labeled;  // after the split pass and R-S contraction, arcs labeled
  DecompositionTree tree;     // rigid arcs contracted
  SkeletonEmbedding skeletons;  // reference embeddings of the final skeletons
  std::vector<int> height;    // per node id of `tree`
  std::vector<int> space;     // per node id of `tree`, -1 for the root
  std::vector<ArcRecord> arcs;  // arcs of `labeled`, top-down
  std::vector<int> p_nodes;   // P-nodes of `tree`, top-down
  std::vector<std::vector<int>> p_children;  // per P-node: child edges in reference order
  std::vector<int> flip_nodes;  // R-nodes of `tree` with a parent; one flip bit each
  BuildStats stats;
};

struct ChoiceVector {
  std::vector<std::vector<int>> order;  // per P-node: a permutation of its child indices
  std::vector<char> flip;               // per flip node

  bool operator==(const ChoiceVector&) const = default;
};

LpTree build_lp_tree(const LevelGraph& g);
// Throws InputError unless `reference` is a level-planar embedding of g.
LpTree build_lp_tree(const LevelGraph& g, const RotationSystem& reference);

ChoiceVector identity_choice(const LpTree& t);
// Throws InputError for a malformed choice vector.
RotationSystem realize(const LpTree& t, const ChoiceVector& c);
boost::multiprecision::cpp_int count_embeddings(const LpTree& t);
// Visits every choice vector with its embedding; stops early when visit returns false.
void enumerate_embeddings(const LpTree& t, const std::function<bool(const ChoiceVector&, const RotationSystem&)>& visit);

// Replaces the embedding of the subgraph with edge set `edges` and poles u, v by its mirror image.
RotationSystem reflect_subgraph(const LevelGraph& g, const RotationSystem& r, const std::vector<int>& edges, int u,
                                int v);

}  // namespace lpt
