#include "lpt/lptree.hpp"

#include <algorithm>
#include <array>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <numeric>

namespace lpt {

const std::vector<int>* NodeRotation::at(int x) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), x);
  if (it == verts.end() || *it != x) return nullptr;
  return &ccw[it - verts.begin()];
}

std::vector<int>* NodeRotation::at(int x) {
  return const_cast<std::vector<int>*>(static_cast<const NodeRotation*>(this)->at(x));
}

namespace {

int pole_index(const DecompositionTree& t, int node, int x) {
  return t.edges[t.nodes[node].parent_edge].u == x ? 0 : 1;
}

// Position of every edge end in the rotation of its endpoint: index 2e for the tail, 2e+1 for the head.
std::vector<int> rotation_positions(const LevelGraph& g, const RotationSystem& r) {
  std::vector<int> pos(2 * g.edge_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < static_cast<int>(r.rotation[v].size()); ++i) {
      int e = r.rotation[v][i];
      pos[2 * e + (g.edge(e).tail == v ? 0 : 1)] = i;
    }
  return pos;
}

int end_position(const LevelGraph& g, const std::vector<int>& pos, int e, int x) {
  return pos[2 * e + (g.edge(e).tail == x ? 0 : 1)];
}

// Skeleton edges of a node grouped by endpoint: sorted (vertex, edge) pairs.
std::vector<std::pair<int, int>> incidences(const DecompositionTree& t, int node) {
  std::vector<std::pair<int, int>> inc;
  for (int e : t.skeleton(node)) {
    inc.emplace_back(t.edges[e].u, e);
    inc.emplace_back(t.edges[e].v, e);
  }
  std::sort(inc.begin(), inc.end());
  return inc;
}

// Edges of `inc` at x other than `skip`; returns the first one.
int other_at(const std::vector<std::pair<int, int>>& inc, int x, int skip) {
  auto it = std::lower_bound(inc.begin(), inc.end(), std::make_pair(x, -1));
  for (; it != inc.end() && it->first == x; ++it)
    if (it->second != skip) return it->second;
  return -1;
}

}  // namespace

SkeletonEmbedding derive_skeleton_embedding(const DecompositionTree& t, const LevelGraph& g, const RotationSystem& r) {
  const int nn = static_cast<int>(t.nodes.size());
  std::vector<int> pos = rotation_positions(g, r);
  std::vector<int> order = t.top_down();
  std::vector<std::vector<std::pair<int, int>>> inc(nn);
  for (int x : order) inc[x] = incidences(t, x);

  // down[x][k]: a graph edge of G(x) at pole k; up[x][k]: a graph edge at pole k outside G(x).
  std::vector<std::array<int, 2>> down(nn, {-1, -1}), up(nn, {-1, -1});
  auto rep = [&](int node, int f, int x) {
    const SkeletonEdge& se = t.edges[f];
    if (se.real >= 0) return se.real;
    if (f == t.nodes[node].parent_edge) return up[node][pole_index(t, node, x)];
    int c = t.neighbor(f);
    return down[c][pole_index(t, c, x)];
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    int pe = t.nodes[x].parent_edge;
    if (pe < 0) continue;
    for (int k = 0; k < 2; ++k) {
      int p = k == 0 ? t.edges[pe].u : t.edges[pe].v;
      int f = other_at(inc[x], p, pe);
      down[x][k] = rep(x, f, p);
    }
  }
  for (int x : order) {
    for (auto [c, e] : t.children(x)) {
      for (int k = 0; k < 2; ++k) {
        int p = k == 0 ? t.edges[t.nodes[c].parent_edge].u : t.edges[t.nodes[c].parent_edge].v;
        int f = other_at(inc[x], p, e);
        up[c][k] = rep(x, f, p);
      }
    }
  }

  SkeletonEmbedding out(nn);
  for (int x : order) {
    NodeRotation& nr = out[x];
    const auto& in = inc[x];
    for (size_t i = 0; i < in.size();) {
      size_t j = i;
      while (j < in.size() && in[j].first == in[i].first) ++j;
      int v = in[i].first;
      std::vector<std::pair<int, int>> keyed;
      for (size_t k = i; k < j; ++k) keyed.emplace_back(end_position(g, pos, rep(x, in[k].second, v), v), in[k].second);
      std::sort(keyed.begin(), keyed.end());
      std::vector<int> ccw;
      for (auto& kv : keyed) ccw.push_back(kv.second);
      nr.verts.push_back(v);
      nr.ccw.push_back(std::move(ccw));
      i = j;
    }
  }
  return out;
}

SpaceInfo compute_spaces(const DecompositionTree& t, const LevelGraph& g, const RotationSystem& r, const FaceSet& faces) {
  const int nn = static_cast<int>(t.nodes.size());
  SkeletonEmbedding skel = derive_skeleton_embedding(t, g, r);
  std::vector<int> pos = rotation_positions(g, r);
  std::vector<int> order = t.top_down();
  // first/last graph edge of G(x) at pole k, counter-clockwise after the rest of the graph.
  std::vector<std::array<int, 2>> first(nn, {-1, -1}), last(nn, {-1, -1});
  auto edge_end = [&](int f, int p, bool want_first) {
    const SkeletonEdge& se = t.edges[f];
    if (se.real >= 0) return se.real;
    int c = t.neighbor(f);
    int k = pole_index(t, c, p);
    return want_first ? first[c][k] : last[c][k];
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    int pe = t.nodes[x].parent_edge;
    if (pe < 0) continue;
    for (int k = 0; k < 2; ++k) {
      int p = k == 0 ? t.edges[pe].u : t.edges[pe].v;
      const std::vector<int>& rot = *skel[x].at(p);
      int n = static_cast<int>(rot.size());
      int i = static_cast<int>(std::find(rot.begin(), rot.end(), pe) - rot.begin());
      first[x][k] = edge_end(rot[(i + 1) % n], p, true);
      last[x][k] = edge_end(rot[(i + n - 1) % n], p, false);
    }
  }
  SpaceInfo info;
  info.face1.assign(nn, -1);
  info.face2.assign(nn, -1);
  info.space.assign(nn, -1);
  for (int x : order) {
    int pe = t.nodes[x].parent_edge;
    if (pe < 0) continue;
    int u = t.edges[pe].u;
    int a = first[x][0], b = last[x][0];
    const auto& rot = r.rotation[u];
    int deg = static_cast<int>(rot.size());
    int before = rot[(end_position(g, pos, a, u) + deg - 1) % deg];
    int f1 = faces.face_of_dart[dart_of(b, g.edge(b).tail == u)];
    int f2 = faces.face_of_dart[dart_of(before, g.edge(before).tail == u)];
    info.face1[x] = f1;
    info.face2[x] = f2;
    info.space[x] = std::min(faces.faces[f1].apex_level, faces.faces[f2].apex_level);
  }
  return info;
}

std::vector<int> compute_spaces(const DecompositionTree& t, const LevelGraph& g, const RotationSystem& r) {
  return compute_spaces(t, g, r, trace_faces(g, r)).space;
}

RotationSystem expand_embedding(const DecompositionTree& t, const LevelGraph& g, const SkeletonEmbedding& skel,
                                const std::vector<char>& parity, const std::vector<std::vector<int>>& p_order) {
  const int n = g.vertex_count();
  std::vector<int> top(n, -1);
  for (int x : t.top_down()) {
    int pe = t.nodes[x].parent_edge;
    int a = pe >= 0 ? t.edges[pe].u : -1, b = pe >= 0 ? t.edges[pe].v : -1;
    for (int w : skel[x].verts)
      if (w != a && w != b && top[w] < 0) top[w] = x;
  }
  auto local = [&](int node, int x) {
    std::vector<int> rot;
    if (!p_order[node].empty()) {
      int pe = t.nodes[node].parent_edge;
      rot.push_back(pe);
      rot.insert(rot.end(), p_order[node].begin(), p_order[node].end());
      if (x != t.poles(node, g).first) std::reverse(rot.begin() + 1, rot.end());
    } else {
      rot = *skel[node].at(x);
    }
    if (parity[node]) std::reverse(rot.begin(), rot.end());
    return rot;
  };

  struct Frame {
    std::vector<int> rot;
    int start, count, next;
  };
  RotationSystem out;
  out.rotation.resize(n);
  std::vector<Frame> stack;
  for (int x = 0; x < n; ++x) {
    if (top[x] < 0) continue;
    auto& res = out.rotation[x];
    std::vector<int> rot = local(top[x], x);
    int cnt = static_cast<int>(rot.size());
    stack.push_back({std::move(rot), 0, cnt, 0});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.next == fr.count) {
        stack.pop_back();
        continue;
      }
      int f = fr.rot[(fr.start + fr.next) % fr.rot.size()];
      ++fr.next;
      const SkeletonEdge& se = t.edges[f];
      if (se.real >= 0) {
        res.push_back(se.real);
        continue;
      }
      int c = t.neighbor(f);
      std::vector<int> sub = local(c, x);
      int k = static_cast<int>(sub.size());
      int i = static_cast<int>(std::find(sub.begin(), sub.end(), se.twin) - sub.begin());
      stack.push_back({std::move(sub), (i + 1) % k, k - 1, 0});
    }
  }
  return out;
}

RotationSystem reflect_subgraph(const LevelGraph& g, const RotationSystem& r, const std::vector<int>& edges, int u,
                                int v) {
  std::vector<char> inside(g.edge_count(), 0);
  for (int e : edges) inside[e] = 1;
  RotationSystem out = r;
  std::vector<char> touched(g.vertex_count(), 0);
  for (int e : edges) touched[g.edge(e).tail] = touched[g.edge(e).head] = 1;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (!touched[w]) continue;
    auto& rot = out.rotation[w];
    if (w != u && w != v) {
      std::reverse(rot.begin(), rot.end());
      continue;
    }
    int d = static_cast<int>(rot.size());
    int start = -1;
    for (int i = 0; i < d && start < 0; ++i)
      if (inside[rot[i]] && !inside[rot[(i + d - 1) % d]]) start = i;
    if (start < 0) {
      std::reverse(rot.begin(), rot.end());
      continue;
    }
    std::rotate(rot.begin(), rot.begin() + start, rot.end());
    int k = 0;
    while (k < d && inside[rot[k]]) ++k;
    std::reverse(rot.begin(), rot.begin() + k);
  }
  return out;
}

namespace {

RotationSystem planar_embedding(const LevelGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                                      boost::property<boost::edge_index_t, int>>;
  Graph bg(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) boost::add_edge(g.edge(e).tail, g.edge(e).head, e, bg);
  using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(g.vertex_count());
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                     boost::boyer_myrvold_params::embedding = &emb[0]);
  if (!planar) throw NotLevelPlanarError("graph is not planar");
  RotationSystem r;
  r.rotation.resize(g.vertex_count());
  auto index = get(boost::edge_index, bg);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const auto& ed : emb[v]) r.rotation[v].push_back(index[ed]);
  return r;
}

// Child edges of a P-node counter-clockwise around its first pole after the parent edge.
std::vector<int> p_child_order(const DecompositionTree& t, const LevelGraph& g, const SkeletonEmbedding& skel, int p) {
  int pe = t.nodes[p].parent_edge;
  const std::vector<int>& rot = *skel[p].at(t.poles(p, g).first);
  int n = static_cast<int>(rot.size());
  int i = static_cast<int>(std::find(rot.begin(), rot.end(), pe) - rot.begin());
  std::vector<int> out;
  for (int k = 1; k < n; ++k) out.push_back(rot[(i + k) % n]);
  return out;
}

std::string invalid_reason(const Diagnostics& d) {
  if (!d.single_source) return "graph must have a single source";
  if (!d.biconnected) return "graph must be biconnected";
  if (!d.unique_apex) return "graph must have a unique apex";
  if (!d.has_st_edge) return "graph must contain the edge (s,t)";
  if (!d.simple) return "graph must be simple";
  return "every demand must stay below the apex level";
}

}  // namespace

RotationSystem planar_rotation(const LevelGraph& g) { return planar_embedding(g); }

RotationSystem reference_embedding(const LevelGraph& g, std::int64_t budget) {
  Diagnostics diag = validate(g);
  if (!diag.ok()) throw InputError(invalid_reason(diag));
  RotationSystem base = planar_embedding(g);
  if (level_planar_faces(g, trace_faces(g, base))) return base;

  DecompositionTree t = build_spqr(g);
  SkeletonEmbedding skel = derive_skeleton_embedding(t, g, base);
  std::vector<int> h = compute_heights(t, g);
  std::vector<int> order = t.top_down();
  const int nn = static_cast<int>(t.nodes.size());

  // One bit per R-node flip except the root's child, whose flip only mirrors everything.
  struct PChoice {
    int node;
    std::vector<int> tall, shorts;
    int bits;
  };
  std::vector<int> flip_nodes;
  std::vector<PChoice> pcs;
  int root_child = t.children(t.root).empty() ? -1 : t.children(t.root).front().first;
  for (int x : order) {
    if (t.nodes[x].kind == NodeKind::R && x != root_child && t.nodes[x].parent >= 0) flip_nodes.push_back(x);
    if (t.nodes[x].kind != NodeKind::P) continue;
    PChoice pc{x, {}, {}, 0};
    int top_level = g.level(t.poles(x, g).second);
    for (int e : p_child_order(t, g, skel, x)) (h[t.neighbor(e)] >= top_level ? pc.tall : pc.shorts).push_back(e);
    std::stable_sort(pc.tall.begin(), pc.tall.end(), [&](int a, int b) { return h[t.neighbor(a)] > h[t.neighbor(b)]; });
    pc.bits = static_cast<int>(pc.tall.size()) - (pc.shorts.empty() && !pc.tall.empty() ? 1 : 0);
    pcs.push_back(std::move(pc));
  }
  int bits = static_cast<int>(flip_nodes.size());
  for (const auto& pc : pcs) bits += pc.bits;

  std::vector<char> parity(nn, 0), flip_bit(nn, 0);
  std::vector<std::vector<int>> p_order(nn);
  std::int64_t tried = 0;
  const std::uint64_t total = bits >= 63 ? ~std::uint64_t(0) : (std::uint64_t(1) << bits);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (++tried > budget) throw SearchBudgetError("level-planar embedding search exceeded its budget");
    int b = 0;
    for (int x : flip_nodes) flip_bit[x] = (mask >> b++) & 1;
    for (const auto& pc : pcs) {
      std::vector<int> left, right;
      for (size_t i = 0; i < pc.tall.size(); ++i) {
        bool to_right = i < static_cast<size_t>(pc.bits) && ((mask >> b++) & 1);
        (to_right ? right : left).push_back(pc.tall[i]);
      }
      auto& po = p_order[pc.node];
      po = left;
      po.insert(po.end(), pc.shorts.begin(), pc.shorts.end());
      po.insert(po.end(), right.rbegin(), right.rend());
    }
    for (int x : order) parity[x] = (t.nodes[x].parent >= 0 ? parity[t.nodes[x].parent] : 0) ^ flip_bit[x];
    RotationSystem cand = expand_embedding(t, g, skel, parity, p_order);
    if (level_planar_faces(g, trace_faces_unchecked(g, cand))) return cand;
  }
  throw NotLevelPlanarError("graph has no level-planar embedding");
}

namespace {

void fill_final(LpTree& lp) {
  const DecompositionTree& t = lp.tree;
  const LevelGraph& g = lp.graph;
  lp.skeletons = derive_skeleton_embedding(t, g, lp.reference);
  lp.height = compute_heights(t, g);
  lp.space = compute_spaces(t, g, lp.reference);
  for (int x : t.top_down()) {
    NodeKind k = t.nodes[x].kind;
    if (k == NodeKind::P) {
      lp.p_nodes.push_back(x);
      lp.p_children.push_back(p_child_order(t, g, lp.skeletons, x));
    }
    if (k == NodeKind::R && t.nodes[x].parent >= 0) lp.flip_nodes.push_back(x);
    ++lp.stats.final_nodes;
    switch (k) {
      case NodeKind::S: ++lp.stats.final_s; break;
      case NodeKind::P: ++lp.stats.final_p; break;
      case NodeKind::Q: ++lp.stats.final_q; break;
      case NodeKind::R: ++lp.stats.final_r; break;
    }
    if (k != NodeKind::Q) lp.stats.skeleton_size += static_cast<long long>(t.skeleton(x).size());
  }
}

}  // namespace

LpTree build_lp_tree(const LevelGraph& g) { return build_lp_tree(g, reference_embedding(g)); }

LpTree build_lp_tree(const LevelGraph& g, const RotationSystem& reference) {
  Diagnostics diag = validate(g);
  if (!diag.ok()) throw InputError(invalid_reason(diag));
  check_rotation_system(g, reference);
  if (!is_level_planar_embedding(g, reference)) throw InputError("reference embedding is not level planar");

  LpTree lp;
  lp.graph = g;
  lp.reference = reference;
  DecompositionTree t = build_spqr(g);
  for (int x : t.top_down()) {
    ++lp.stats.spqr_nodes;
    switch (t.nodes[x].kind) {
      case NodeKind::S: ++lp.stats.spqr_s; break;
      case NodeKind::P: ++lp.stats.spqr_p; break;
      case NodeKind::Q: ++lp.stats.spqr_q; break;
      case NodeKind::R: ++lp.stats.spqr_r; break;
    }
  }

  // Split pass. Children run counter-clockwise around the lower pole from the rightmost
  // to the leftmost one, so a tie between the two ends goes to the back.
  {
    std::vector<int> h = compute_heights(t, g);
    SkeletonEmbedding skel = derive_skeleton_embedding(t, g, reference);
    for (int p : t.top_down()) {
      if (t.nodes[p].kind != NodeKind::P) continue;
      int top_level = g.level(t.poles(p, g).second);
      std::vector<int> kids = p_child_order(t, g, skel, p);
      size_t lo = 0, hi = kids.size();  // live window [lo, hi)
      while (hi - lo >= 2) {
        int hf = h[t.neighbor(kids[lo])], hb = h[t.neighbor(kids[hi - 1])];
        bool back = hb >= hf;
        int e = back ? kids[hi - 1] : kids[lo];
        if (std::max(hf, hb) < top_level) break;
        if (hi - lo == 2) {
          t.split(p, e);
          ++lp.stats.p_conversions;
          break;
        }
        int mu1 = t.split(p, e);
        h.resize(t.nodes.size(), -1);
        h[mu1] = h[p];
        back ? --hi : ++lo;
        int rest = -1;
        for (size_t i = lo; i < hi; ++i) rest = std::max(rest, h[t.neighbor(kids[i])]);
        h[p] = rest;
        ++lp.stats.p_splits;
      }
    }
  }

  for (int x : t.top_down()) {
    int p = t.nodes[x].parent;
    if (p >= 0 && t.nodes[x].kind == NodeKind::S && t.nodes[p].kind == NodeKind::R) {
      t.contract(x);
      ++lp.stats.rs_contractions;
    }
  }
  t.compact();

  // Arc labels against the reference embedding.
  std::vector<int> h = compute_heights(t, g);
  std::vector<int> spc = compute_spaces(t, g, reference);
  std::vector<int> order = t.top_down();
  for (int x : order) {
    int p = t.nodes[x].parent;
    if (p < 0) continue;
    ArcRecord a;
    a.parent = p;
    a.child = x;
    a.parent_kind = t.nodes[p].kind;
    a.child_kind = t.nodes[x].kind;
    a.height = h[x];
    a.space = spc[x];
    a.label = h[x] >= spc[x] ? ArcLabel::Rigid : ArcLabel::Flexible;
    t.nodes[x].label = a.label;
    (a.label == ArcLabel::Rigid ? lp.stats.rigid_arcs : lp.stats.flexible_arcs)++;
    lp.arcs.push_back(a);
  }
  lp.labeled = t;

  for (int x : order) {
    if (t.nodes[x].label != ArcLabel::Rigid) continue;
    int p = t.nodes[x].parent;
    if (t.nodes[x].kind == NodeKind::P || t.nodes[p].kind == NodeKind::P)
      throw std::logic_error("rigid arc incident to a P-node");
    int merged = t.contract(x);
    t.nodes[merged].kind = NodeKind::R;
  }
  t.compact();
  lp.tree = std::move(t);
  fill_final(lp);
  return lp;
}

ChoiceVector identity_choice(const LpTree& t) {
  ChoiceVector c;
  for (const auto& kids : t.p_children) {
    std::vector<int> id(kids.size());
    std::iota(id.begin(), id.end(), 0);
    c.order.push_back(std::move(id));
  }
  c.flip.assign(t.flip_nodes.size(), 0);
  return c;
}

RotationSystem realize(const LpTree& t, const ChoiceVector& c) {
  if (c.order.size() != t.p_nodes.size() || c.flip.size() != t.flip_nodes.size())
    throw InputError("choice vector does not match the LP-tree");
  const int nn = static_cast<int>(t.tree.nodes.size());
  std::vector<std::vector<int>> p_order(nn);
  for (size_t i = 0; i < t.p_nodes.size(); ++i) {
    const auto& kids = t.p_children[i];
    const auto& perm = c.order[i];
    if (perm.size() != kids.size()) throw InputError("P-node permutation has the wrong length");
    std::vector<char> seen(kids.size(), 0);
    auto& po = p_order[t.p_nodes[i]];
    for (int k : perm) {
      if (k < 0 || k >= static_cast<int>(kids.size()) || seen[k]) throw InputError("P-node order is not a permutation");
      seen[k] = 1;
      po.push_back(kids[k]);
    }
  }
  std::vector<char> flip(nn, 0), parity(nn, 0);
  for (size_t i = 0; i < t.flip_nodes.size(); ++i) flip[t.flip_nodes[i]] = c.flip[i] != 0;
  for (int x : t.tree.top_down()) {
    int p = t.tree.nodes[x].parent;
    parity[x] = (p >= 0 ? parity[p] : 0) ^ flip[x];
  }
  return expand_embedding(t.tree, t.graph, t.skeletons, parity, p_order);
}

boost::multiprecision::cpp_int count_embeddings(const LpTree& t) {
  boost::multiprecision::cpp_int n = 1;
  for (const auto& kids : t.p_children)
    for (size_t k = 2; k <= kids.size(); ++k) n *= static_cast<unsigned>(k);
  n <<= static_cast<unsigned>(t.flip_nodes.size());
  return n;
}

void enumerate_embeddings(const LpTree& t, const std::function<bool(const ChoiceVector&, const RotationSystem&)>& visit) {
  ChoiceVector c = identity_choice(t);
  for (;;) {
    if (!visit(c, realize(t, c))) return;
    // Odometer: flips first, then permutations.
    bool advanced = false;
    for (size_t i = 0; i < c.flip.size() && !advanced; ++i) {
      c.flip[i] ^= 1;
      advanced = c.flip[i] != 0;
    }
    for (size_t i = 0; i < c.order.size() && !advanced; ++i)
      advanced = std::next_permutation(c.order[i].begin(), c.order[i].end());
    if (!advanced) return;
  }
}

}  // namespace lpt
