#include "lpt/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "triconnected.hpp"

namespace lpt {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::S: return "S";
    case NodeKind::P: return "P";
    case NodeKind::Q: return "Q";
    case NodeKind::R: return "R";
  }
  return "?";
}

const char* label_name(ArcLabel a) {
  switch (a) {
    case ArcLabel::Unlabeled: return "unlabeled";
    case ArcLabel::Rigid: return "rigid";
    case ArcLabel::Flexible: return "flexible";
  }
  return "?";
}

int DecompositionTree::add_node(NodeKind kind) {
  TreeNode n;
  n.kind = kind;
  nodes.push_back(std::move(n));
  return static_cast<int>(nodes.size()) - 1;
}

int DecompositionTree::add_edge(int node, int u, int v, int real) {
  SkeletonEdge e;
  e.u = u;
  e.v = v;
  e.node = node;
  e.real = real;
  edges.push_back(e);
  int id = static_cast<int>(edges.size()) - 1;
  nodes[node].edges.push_back(id);
  return id;
}

void DecompositionTree::make_twins(int a, int b) {
  edges[a].twin = b;
  edges[b].twin = a;
}

std::vector<int> DecompositionTree::skeleton(int node) const {
  std::vector<int> out;
  out.reserve(nodes[node].edges.size());
  for (int e : nodes[node].edges)
    if (edges[e].alive && edges[e].node == node) out.push_back(e);
  return out;
}

std::vector<int> DecompositionTree::skeleton_vertices(int node) const {
  std::vector<int> vs;
  for (int e : skeleton(node)) {
    vs.push_back(edges[e].u);
    vs.push_back(edges[e].v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<std::pair<int, int>> DecompositionTree::children(int node) const {
  std::vector<std::pair<int, int>> out;
  for (int e : skeleton(node))
    if (edges[e].is_virtual() && e != nodes[node].parent_edge) out.emplace_back(neighbor(e), e);
  return out;
}

std::pair<int, int> DecompositionTree::poles(int node, const LevelGraph& g) const {
  int e = nodes[node].parent_edge;
  if (e < 0) {
    for (int f : skeleton(node))
      if (edges[f].real >= 0) {
        e = f;
        break;
      }
  }
  if (e < 0) return {-1, -1};
  int a = edges[e].u, b = edges[e].v;
  if (g.level(b) < g.level(a) || (g.level(b) == g.level(a) && b < a)) std::swap(a, b);
  return {a, b};
}

std::vector<int> DecompositionTree::top_down() const {
  std::vector<int> order;
  if (root < 0) return order;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i)
    for (auto [c, e] : children(order[i])) order.push_back(c);
  return order;
}

int DecompositionTree::live_nodes() const {
  int k = 0;
  for (const auto& n : nodes) k += n.alive;
  return k;
}

void DecompositionTree::reroot(int r) {
  root = r;
  for (auto& n : nodes) {
    n.parent = -1;
    n.parent_edge = -1;
  }
  std::vector<char> seen(nodes.size(), 0);
  std::vector<int> queue{r};
  seen[r] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (int e : skeleton(x)) {
      if (!edges[e].is_virtual()) continue;
      int y = neighbor(e);
      if (seen[y]) continue;
      seen[y] = 1;
      nodes[y].parent = x;
      nodes[y].parent_edge = edges[e].twin;
      queue.push_back(y);
    }
  }
}

int DecompositionTree::contract(int child) {
  int lambda = nodes[child].parent;
  int ec = nodes[child].parent_edge;
  int el = edges[ec].twin;
  edges[ec].alive = false;
  edges[el].alive = false;
  for (int e : skeleton(child)) {
    edges[e].node = lambda;
    nodes[lambda].edges.push_back(e);
    if (edges[e].is_virtual()) {
      int y = edges[edges[e].twin].node;
      if (nodes[y].parent == child) nodes[y].parent = lambda;
    }
  }
  nodes[child].alive = false;
  nodes[child].edges.clear();
  nodes[child].edges.shrink_to_fit();
  return lambda;
}

int DecompositionTree::split(int p, int e_max) {
  if (children(p).size() <= 2) {
    nodes[p].kind = NodeKind::R;
    return p;
  }
  int lambda = nodes[p].parent;
  int e_p = nodes[p].parent_edge;
  int nu = neighbor(e_max);
  int mu1 = add_node(NodeKind::R);
  for (int e : {e_p, e_max}) {
    edges[e].node = mu1;
    nodes[mu1].edges.push_back(e);
  }
  int a = add_edge(mu1, edges[e_p].u, edges[e_p].v);
  int b = add_edge(p, edges[e_p].u, edges[e_p].v);
  make_twins(a, b);
  nodes[mu1].parent = lambda;
  nodes[mu1].parent_edge = e_p;
  nodes[mu1].label = nodes[p].label;
  nodes[p].parent = mu1;
  nodes[p].parent_edge = b;
  nodes[p].label = ArcLabel::Unlabeled;
  nodes[nu].parent = mu1;
  return mu1;
}

void DecompositionTree::compact() {
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].alive) continue;
    nodes[i].edges = skeleton(static_cast<int>(i));
  }
}

DecompositionTree build_spqr(const LevelGraph& g) {
  Diagnostics diag = validate(g);
  if (!diag.biconnected) throw InputError("SPQR-tree needs a biconnected graph");
  if (!diag.simple) throw InputError("SPQR-tree needs a simple graph");
  if (!diag.single_source || !diag.unique_apex || !diag.has_st_edge)
    throw InputError("SPQR-tree needs a single source, a unique apex and the edge (s,t)");
  int s = g.source();
  int t = *g.unique_apex();
  int st = *g.find_edge(s, t);

  DecompositionTree tree;
  auto add_q = [&](int e) {
    int q = tree.add_node(NodeKind::Q);
    tree.add_edge(q, g.edge(e).tail, g.edge(e).head, e);
    return q;
  };

  if (g.edge_count() == 1) {
    tree.root = add_q(st);
    return tree;
  }

  std::vector<std::pair<int, int>> input;
  input.reserve(g.edge_count());
  for (const auto& e : g.edges()) input.emplace_back(e.tail, e.head);
  detail::TriconnectedResult tc = detail::triconnected_components(g.vertex_count(), input);

  std::vector<int> first_copy(tc.endpoints.size(), -1);
  int root = -1;
  for (const auto& comp : tc.components) {
    NodeKind kind = comp.type == detail::CompType::Bond      ? NodeKind::P
                    : comp.type == detail::CompType::Polygon ? NodeKind::S
                                                             : NodeKind::R;
    int node = tree.add_node(kind);
    for (int e : comp.edges) {
      auto [a, b] = tc.endpoints[e];
      int se = tree.add_edge(node, a, b);
      if (e < tc.real_edges) {
        int q = add_q(e);
        tree.make_twins(se, tree.add_edge(q, a, b));
        if (e == st) root = q;
      } else if (first_copy[e] < 0) {
        first_copy[e] = se;
      } else {
        tree.make_twins(first_copy[e], se);
      }
    }
  }
  tree.reroot(root);
  return tree;
}

std::vector<int> expansion_edges(const DecompositionTree& t, int ve) {
  std::vector<int> out;
  std::vector<std::pair<int, int>> stack{{t.neighbor(ve), t.edges[ve].twin}};
  while (!stack.empty()) {
    auto [node, skip] = stack.back();
    stack.pop_back();
    for (int e : t.skeleton(node)) {
      if (e == skip) continue;
      if (t.edges[e].real >= 0) out.push_back(t.edges[e].real);
      else if (t.edges[e].is_virtual()) stack.emplace_back(t.neighbor(e), t.edges[e].twin);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LevelGraph expansion_graph(const LevelGraph& g, const DecompositionTree& t, int ve) {
  std::vector<int> es = expansion_edges(t, ve);
  std::vector<char> used(g.vertex_count(), 0);
  for (int e : es) used[g.edge(e).tail] = used[g.edge(e).head] = 1;
  LevelGraph h;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (used[v]) h.add_vertex(g.id(v), g.level(v), g.demand(v));
  for (int e : es) h.add_edge(g.id(g.edge(e).tail), g.id(g.edge(e).head));
  return h;
}

std::vector<int> compute_heights(const DecompositionTree& t, const LevelGraph& g) {
  std::vector<int> h(t.nodes.size(), -1);
  auto order = t.top_down();
  auto lower_level = [&](int se) { return std::min(g.level(t.edges[se].u), g.level(t.edges[se].v)); };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    const TreeNode& node = t.nodes[x];
    if (node.kind == NodeKind::Q) {
      for (int e : t.skeleton(x))
        if (t.edges[e].real >= 0) h[x] = lower_level(e);
      continue;
    }
    auto [pu, pv] = t.poles(x, g);
    int best = -1;
    for (int e : t.skeleton(x)) {
      if (e == node.parent_edge) continue;
      if (t.edges[e].real >= 0) best = std::max(best, lower_level(e));
      else if (t.edges[e].is_virtual()) best = std::max(best, h[t.neighbor(e)]);
    }
    for (int w : t.skeleton_vertices(x))
      if (w != pu && w != pv) best = std::max(best, g.demand(w));
    h[x] = best;
  }
  return h;
}

DecompositionTree contract_arc(const DecompositionTree& t, int child) {
  if (child < 0 || child >= static_cast<int>(t.nodes.size()) || !t.nodes[child].alive || t.nodes[child].parent < 0)
    throw InputError("contract_arc: no arc into node " + std::to_string(child));
  DecompositionTree out = t;
  int merged = out.contract(child);
  out.nodes[merged].kind = NodeKind::R;
  out.compact();
  return out;
}

DecompositionTree split_p_node(const DecompositionTree& t, const LevelGraph& g, int p, int e_max) {
  if (p < 0 || p >= static_cast<int>(t.nodes.size()) || !t.nodes[p].alive || t.nodes[p].kind != NodeKind::P)
    throw InputError("split_p_node: node " + std::to_string(p) + " is not a P-node");
  auto heights = compute_heights(t, g);
  auto kids = t.children(p);
  int best = -1, mine = -1;
  for (auto [c, e] : kids) {
    best = std::max(best, heights[c]);
    if (e == e_max) mine = heights[c];
  }
  if (mine < 0) throw InputError("split_p_node: edge is not a child edge of the P-node");
  if (mine < best) throw InputError("split_p_node: child edge does not have maximal height");
  DecompositionTree out = t;
  out.split(p, e_max);
  return out;
}

namespace {

bool connected_without(const std::vector<std::pair<int, int>>& es, const std::vector<int>& vs, int skip_a, int skip_b) {
  std::map<int, int> idx;
  for (int v : vs)
    if (v != skip_a && v != skip_b) idx.emplace(v, static_cast<int>(idx.size()));
  if (idx.empty()) return true;
  std::vector<int> parent(idx.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  size_t comps = idx.size();
  for (auto [a, b] : es) {
    if (a == skip_a || a == skip_b || b == skip_a || b == skip_b) continue;
    int ra = find(idx[a]), rb = find(idx[b]);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

std::vector<std::pair<int, int>> skeleton_pairs(const DecompositionTree& t, int node) {
  std::vector<std::pair<int, int>> es;
  for (int e : t.skeleton(node)) es.emplace_back(t.edges[e].u, t.edges[e].v);
  return es;
}

}  // namespace

bool skeleton_triconnected(const DecompositionTree& t, int node) {
  auto es = skeleton_pairs(t, node);
  auto vs = t.skeleton_vertices(node);
  if (vs.size() < 4) return false;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : es)
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) return false;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!connected_without(es, vs, vs[i], vs[j])) return false;
  return true;
}

TreeCheck validate_tree(const DecompositionTree& t, const LevelGraph& g) {
  TreeCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.problems.push_back(std::move(msg));
  };
  int nn = static_cast<int>(t.nodes.size());
  if (t.root < 0 || t.root >= nn || !t.nodes[t.root].alive) {
    fail("root is missing");
    return check;
  }
  std::vector<int> real_seen(g.edge_count(), 0);
  for (int x = 0; x < nn; ++x) {
    if (!t.nodes[x].alive) continue;
    for (int e : t.skeleton(x)) {
      const SkeletonEdge& se = t.edges[e];
      if (se.real >= 0) {
        if (se.real >= g.edge_count()) {
          fail("real edge index out of range");
          continue;
        }
        ++real_seen[se.real];
        const Edge& ge = g.edge(se.real);
        if (!((ge.tail == se.u && ge.head == se.v) || (ge.tail == se.v && ge.head == se.u)))
          fail("real edge endpoints differ from the graph edge");
      }
      if (se.is_virtual()) {
        int tw = se.twin;
        if (tw < 0 || tw >= static_cast<int>(t.edges.size()) || !t.edges[tw].alive) {
          fail("virtual edge " + std::to_string(e) + " has a dangling twin");
          continue;
        }
        const SkeletonEdge& te = t.edges[tw];
        if (te.twin != e) fail("twin relation is not symmetric at edge " + std::to_string(e));
        if (te.node == x) fail("twin lies in the same skeleton at edge " + std::to_string(e));
        if (te.node < 0 || te.node >= nn || !t.nodes[te.node].alive) fail("twin lies in a dead node");
        if (std::minmax(se.u, se.v) != std::minmax(te.u, te.v)) fail("twins have different endpoints");
      }
      if (se.real < 0 && !se.is_virtual()) fail("skeleton edge is neither real nor virtual");
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (real_seen[e] != 1) fail("graph edge " + std::to_string(e) + " appears " + std::to_string(real_seen[e]) + " times");
  if (!check.ok) return check;

  // Connectivity and parent pointers.
  std::vector<char> seen(nn, 0);
  std::vector<int> queue{t.root};
  seen[t.root] = 1;
  int arcs = 0;
  if (t.nodes[t.root].parent != -1) fail("root has a parent");
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (int e : t.skeleton(x)) {
      if (!t.edges[e].is_virtual() || e == t.nodes[x].parent_edge) continue;
      int y = t.neighbor(e);
      ++arcs;
      if (seen[y]) {
        fail("tree contains a cycle through node " + std::to_string(y));
        continue;
      }
      seen[y] = 1;
      if (t.nodes[y].parent != x || t.nodes[y].parent_edge != t.edges[e].twin)
        fail("parent pointer of node " + std::to_string(y) + " is inconsistent");
      queue.push_back(y);
    }
  }
  if (static_cast<int>(queue.size()) != t.live_nodes()) fail("tree is not connected");
  if (arcs != t.live_nodes() - 1) fail("arc count differs from node count minus one");

  for (int x : queue) {
    auto es = t.skeleton(x);
    auto vs = t.skeleton_vertices(x);
    NodeKind k = t.nodes[x].kind;
    int reals = 0, virt = 0;
    for (int e : es) (t.edges[e].real >= 0 ? reals : virt)++;
    std::string name = std::string(kind_name(k)) + "-node " + std::to_string(x);
    switch (k) {
      case NodeKind::Q:
        if (reals != 1 || virt > 1 || (virt == 0 && t.live_nodes() != 1)) fail(name + " is not one real plus one virtual edge");
        break;
      case NodeKind::S: {
        std::map<int, int> deg;
        for (int e : es) ++deg[t.edges[e].u], ++deg[t.edges[e].v];
        bool cycle = es.size() >= 3 && vs.size() == es.size() && connected_without(skeleton_pairs(t, x), vs, -1, -1);
        for (auto [v, d] : deg) cycle &= d == 2;
        if (!cycle) fail(name + " skeleton is not a cycle");
        break;
      }
      case NodeKind::P:
        if (es.size() < 3 || vs.size() != 2) fail(name + " skeleton is not a bundle of at least three edges");
        break;
      case NodeKind::R: {
        auto pairs = skeleton_pairs(t, x);
        bool bic = es.size() >= 3 && connected_without(pairs, vs, -1, -1);
        for (size_t i = 0; bic && i < vs.size(); ++i) bic = connected_without(pairs, vs, vs[i], -1);
        if (!bic) fail(name + " skeleton is not biconnected");
        break;
      }
    }
    int p = t.nodes[x].parent;
    if (p >= 0) {
      NodeKind pk = t.nodes[p].kind;
      if ((pk == NodeKind::S && k == NodeKind::S) || (pk == NodeKind::P && k == NodeKind::P))
        fail("adjacent nodes " + std::to_string(p) + " and " + std::to_string(x) + " are both " + kind_name(k));
    }
  }

  if (t.nodes[t.root].kind == NodeKind::Q) {
    auto sources = g.sources();
    auto apex = g.unique_apex();
    if (sources.size() == 1 && apex) {
      for (int e : t.skeleton(t.root)) {
        const SkeletonEdge& se = t.edges[e];
        if (se.real >= 0 && std::minmax(se.u, se.v) != std::minmax(sources[0], *apex))
          fail("root Q-node does not hold the edge (s,t)");
      }
    }
  }
  return check;
}

}  // namespace lpt
