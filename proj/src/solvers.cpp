#include "lpt/solvers.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace lpt {

TwoSatResult twosat_solve(const TwoSatInstance& t) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  const int n = t.variables;
  auto node = [](Literal l) { return 2 * l.var + (l.positive ? 0 : 1); };
  Graph ig(2 * n);
  for (auto [a, b] : t.clauses) {
    if (a.var < 0 || a.var >= n || b.var < 0 || b.var >= n) throw InputError("clause uses an unknown variable");
    boost::add_edge(node(!a), node(b), ig);
    boost::add_edge(node(!b), node(a), ig);
  }
  std::vector<int> comp(2 * n);
  if (n > 0) boost::strong_components(ig, boost::make_iterator_property_map(comp.begin(), get(boost::vertex_index, ig)));
  TwoSatResult res;
  for (int x = 0; x < n; ++x)
    if (comp[2 * x] == comp[2 * x + 1]) {
      res.conflict_var = x;
      return res;
    }
  // Components come out in reverse topological order; a literal whose component closes
  // first sits downstream of its negation and is the one to make true.
  res.sat = true;
  res.assignment.resize(n);
  for (int x = 0; x < n; ++x) res.assignment[x] = comp[2 * x] < comp[2 * x + 1];
  return res;
}

// ---------------------------------------------------------------------------
// Vertex-order translation.

OrderTranslator::OrderTranslator(const LevelGraph& g) : g_(g) {
  source_ = g.source();
  std::optional<int> apex = g.unique_apex();
  if (!apex) throw InputError("graph must have a unique apex");
  std::optional<int> st = g.find_edge(source_, *apex);
  if (!st) throw InputError("graph must contain the edge (s,t)");
  st_edge_ = *st;

  const int n = g.vertex_count();
  depth_.assign(n, -1);
  parent_edge_.assign(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<std::pair<int, size_t>> stack{{source_, 0}};
  depth_[source_] = 0;
  parent[source_] = source_;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto& inc = g.incident(v);
    if (i == inc.size()) {
      stack.pop_back();
      continue;
    }
    int e = inc[i++];
    int w = g.edge(e).head;
    if (w == v || depth_[w] >= 0) continue;
    depth_[w] = depth_[v] + 1;
    parent[w] = v;
    parent_edge_[w] = e;
    stack.emplace_back(w, 0);
  }
  int lg = 1;
  while ((1 << lg) < n) ++lg;
  up_.assign(lg, std::vector<int>(n, source_));
  for (int v = 0; v < n; ++v)
    if (depth_[v] >= 0) up_[0][v] = parent[v];
  for (int k = 1; k < lg; ++k)
    for (int v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
}

int OrderTranslator::ancestor(int v, int d) const {
  for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k)
    if (depth_[v] - (1 << k) >= d) v = up_[k][v];
  return v;
}

ConstraintTriple OrderTranslator::translate(int u, int v) const {
  const int n = g_.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("constraint vertex out of range");
  if (u == v) throw InputError("constraint relates a vertex to itself");
  if (g_.level(u) != g_.level(v)) throw InputError("constrained pair is not on one level");
  if (depth_[u] < 0 || depth_[v] < 0) throw InputError("constrained vertex is unreachable from the source");
  // Same level rules out ancestry, so the meeting vertex lies strictly below both.
  int a = u, b = v;
  int d = std::min(depth_[a], depth_[b]);
  a = ancestor(a, d);
  b = ancestor(b, d);
  for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k)
    if (up_[k][a] != up_[k][b]) {
      a = up_[k][a];
      b = up_[k][b];
    }
  ConstraintTriple c;
  c.vertex = up_[0][a];
  c.e = parent_edge_[a];
  c.f = parent_edge_[b];
  if (c.vertex == source_) {
    c.g = st_edge_;
  } else {
    for (int e : g_.incident(c.vertex))
      if (g_.edge(e).head == c.vertex) {
        c.g = e;
        break;
      }
  }
  return c;
}

ConstraintTriple translate_order_constraint(const LevelGraph& g, int u, int v) { return OrderTranslator(g).translate(u, v); }

// ---------------------------------------------------------------------------
// Per-node constraint collection on an LP-tree.

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.size() <= 2) return std::is_permutation(a.begin(), a.end(), b.begin());
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  size_t off = it - b.begin();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}

std::vector<int> restrict_to(const std::vector<int>& seq, const std::vector<int>& keep) {
  std::vector<int> out;
  for (int x : seq)
    if (std::find(keep.begin(), keep.end(), x) != keep.end()) out.push_back(x);
  return out;
}

class NodeConstraints {
 public:
  explicit NodeConstraints(const LpTree& t) : t_(t), tr_(t.tree) {
    const int nn = static_cast<int>(tr_.nodes.size());
    depth_.assign(nn, 0);
    for (int x : tr_.top_down()) {
      int p = tr_.nodes[x].parent;
      depth_[x] = p >= 0 ? depth_[p] + 1 : 0;
    }
    real_edge_.assign(t.graph.edge_count(), -1);
    for (int x : tr_.top_down())
      for (int e : tr_.skeleton(x))
        if (tr_.edges[e].real >= 0) real_edge_[tr_.edges[e].real] = e;
    top_.assign(t.graph.vertex_count(), -1);
    for (int x : tr_.top_down()) {
      int pe = tr_.nodes[x].parent_edge;
      int a = pe >= 0 ? tr_.edges[pe].u : -1, b = pe >= 0 ? tr_.edges[pe].v : -1;
      for (int w : t.skeletons[x].verts)
        if (w != a && w != b && top_[w] < 0) top_[w] = x;
    }
    for (size_t i = 0; i < t.flip_nodes.size(); ++i) flip_index_[t.flip_nodes[i]] = static_cast<int>(i);
    for (size_t i = 0; i < t.p_nodes.size(); ++i) p_index_[t.p_nodes[i]] = static_cast<int>(i);
    p_orders_.resize(t.p_nodes.size());
    sat_.variables = static_cast<int>(t.flip_nodes.size());
  }

  bool failed() const { return !reason_.empty(); }
  const std::string& reason() const { return reason_; }

  // The cyclic order of `edges` around w must match `ccw`.
  void add_cyclic(int w, const std::vector<int>& ccw) {
    if (failed() || ccw.size() < 3) return;
    std::vector<std::vector<std::pair<int, int>>> paths;
    std::set<int> nodes;
    for (int e : ccw) {
      paths.push_back(path(e, w));
      for (auto [x, se] : paths.back()) nodes.insert(x);
    }
    for (int x : nodes) {
      std::vector<int> word;
      for (const auto& p : paths) word.push_back(symbol(p, x));
      std::vector<int> order;
      if (!runs(word, order)) {
        fail("edges of one skeleton edge are not consecutive around " + t_.graph.id(w));
        return;
      }
      constrain(x, w, order);
      if (failed()) return;
    }
  }

  void add_triple(int w, const std::array<int, 3>& ccw) {
    if (failed()) return;
    std::vector<std::pair<int, int>> p[3];
    for (int i = 0; i < 3; ++i) p[i] = path(ccw[i], w);
    int best = -1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        int l = meet(p[i], p[j]);
        if (best < 0 || depth_[l] > depth_[best]) best = l;
      }
    std::vector<int> order;
    for (int i = 0; i < 3; ++i) order.push_back(symbol(p[i], best));
    constrain(best, w, order);
  }

  // A choice vector meeting every constraint, or nothing when they conflict.
  std::optional<ChoiceVector> solve() {
    if (failed()) return std::nullopt;
    TwoSatResult sol = twosat_solve(sat_);
    if (!sol.sat) {
      fail("rigid node orientations conflict");
      return std::nullopt;
    }
    const int nn = static_cast<int>(tr_.nodes.size());
    std::vector<std::vector<int>> absolute(t_.p_nodes.size());
    for (size_t i = 0; i < t_.p_nodes.size(); ++i) {
      auto a = arrange(t_.p_nodes[i], p_orders_[i]);
      if (!a) {
        fail("parallel node orders conflict");
        return std::nullopt;
      }
      absolute[i] = std::move(*a);
    }
    ChoiceVector c = identity_choice(t_);
    std::vector<char> parity(nn, 0);
    for (int x : tr_.top_down()) {
      int p = tr_.nodes[x].parent;
      char inherited = p >= 0 ? parity[p] : 0;
      parity[x] = inherited;
      if (auto it = flip_index_.find(x); it != flip_index_.end()) {
        char want = sol.assignment[it->second] ? 0 : 1;  // true keeps the reference
        c.flip[it->second] = want ^ inherited;
        parity[x] = want;
      }
      if (auto it = p_index_.find(x); it != p_index_.end()) {
        const auto& kids = t_.p_children[it->second];
        std::vector<int> rest(absolute[it->second].begin() + 1, absolute[it->second].end());
        if (inherited) std::reverse(rest.begin(), rest.end());
        auto& perm = c.order[it->second];
        perm.clear();
        for (int e : rest) perm.push_back(static_cast<int>(std::find(kids.begin(), kids.end(), e) - kids.begin()));
      }
    }
    return c;
  }

 private:
  const LpTree& t_;
  const DecompositionTree& tr_;
  std::vector<int> depth_, real_edge_, top_;
  std::unordered_map<int, int> flip_index_, p_index_;
  std::vector<std::vector<std::vector<int>>> p_orders_;  // per P-node, orders at the first pole
  TwoSatInstance sat_;
  std::string reason_;

  void fail(std::string why) {
    if (reason_.empty()) reason_ = std::move(why);
  }

  // (node, skeleton edge at w) from the node holding e up to the top node of w.
  std::vector<std::pair<int, int>> path(int e, int w) const {
    if (e < 0 || e >= static_cast<int>(real_edge_.size()) || real_edge_[e] < 0)
      throw InputError("constraint edge is not in the graph");
    const LevelGraph& g = t_.graph;
    if (g.edge(e).tail != w && g.edge(e).head != w) throw InputError("constraint edge is not incident to its vertex");
    std::vector<std::pair<int, int>> out;
    int se = real_edge_[e];
    int x = tr_.edges[se].node;
    out.emplace_back(x, se);
    while (x != top_[w]) {
      int pe = tr_.nodes[x].parent_edge;
      if (pe < 0) throw std::logic_error("edge path misses the top node of its vertex");
      se = tr_.edges[pe].twin;
      x = tr_.nodes[x].parent;
      out.emplace_back(x, se);
    }
    return out;
  }

  int symbol(const std::vector<std::pair<int, int>>& p, int x) const {
    for (auto [y, se] : p)
      if (y == x) return se;
    return tr_.nodes[x].parent_edge;
  }

  int meet(const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) const {
    // Both paths end at the same top node; walk back while they agree.
    size_t i = a.size(), j = b.size();
    int last = a.back().first;
    while (i > 0 && j > 0 && a[i - 1].first == b[j - 1].first) {
      last = a[i - 1].first;
      --i;
      --j;
    }
    return last;
  }

  // Collapses a cyclic word into its runs; false when a symbol has two runs.
  static bool runs(const std::vector<int>& word, std::vector<int>& order) {
    const size_t n = word.size();
    size_t start = 0;
    while (start < n && word[start] == word[(start + n - 1) % n]) ++start;
    if (start == n) {
      order = {word[0]};
      return true;
    }
    std::set<int> seen;
    for (size_t k = 0; k < n; ++k) {
      int s = word[(start + k) % n];
      if (!order.empty() && order.back() == s) continue;
      if (!seen.insert(s).second) return false;
      order.push_back(s);
    }
    return true;
  }

  void constrain(int x, int w, std::vector<int> order) {
    if (order.size() < 3) return;
    NodeKind k = tr_.nodes[x].kind;
    if (k == NodeKind::R) {
      std::vector<int> ref = restrict_to(*t_.skeletons[x].at(w), order);
      bool same = cyclic_equal(ref, order);
      std::reverse(ref.begin(), ref.end());
      bool mirrored = cyclic_equal(ref, order);
      if (!same && !mirrored) {
        fail("rigid node cannot realize the order around " + t_.graph.id(w));
        return;
      }
      auto it = flip_index_.find(x);
      if (it == flip_index_.end()) {
        if (!same) fail("the root skeleton cannot be reflected");
        return;
      }
      if (same && mirrored) return;
      sat_.add_unit(Literal{it->second, same});
      return;
    }
    if (k != NodeKind::P) throw std::logic_error("three skeleton edges meet at a vertex of a cycle skeleton");
    if (w != tr_.poles(x, t_.graph).first) std::reverse(order.begin(), order.end());
    p_orders_[p_index_.at(x)].push_back(std::move(order));
  }

  // Cyclic order of the P-node's skeleton edges, parent edge first, meeting every order.
  std::optional<std::vector<int>> arrange(int x, const std::vector<std::vector<int>>& orders) const {
    int pe = tr_.nodes[x].parent_edge;
    std::vector<int> placed{pe};
    std::vector<int> todo;
    for (const auto& o : orders)
      for (int e : o)
        if (e != pe && std::find(todo.begin(), todo.end(), e) == todo.end()) todo.push_back(e);
    auto consistent = [&]() {
      for (const auto& o : orders) {
        std::vector<int> have = restrict_to(placed, o);
        if (!cyclic_equal(have, restrict_to(o, have))) return false;
      }
      return true;
    };
    std::int64_t steps = 0;
    auto place = [&](auto&& self, size_t i) -> bool {
      if (i == todo.size()) return true;
      for (size_t pos = 1; pos <= placed.size(); ++pos) {
        if (++steps > (std::int64_t(1) << 24)) throw SearchBudgetError("parallel node order search exceeded its budget");
        placed.insert(placed.begin() + pos, todo[i]);
        if (consistent() && self(self, i + 1)) return true;
        placed.erase(placed.begin() + pos);
      }
      return false;
    };
    if (!place(place, 0)) return std::nullopt;
    for (int e : t_.p_children[p_index_.at(x)])
      if (std::find(placed.begin(), placed.end(), e) == placed.end()) placed.push_back(e);
    return placed;
  }
};

bool graph_level_planar(const LevelGraph& g, std::optional<LpTree>& tree, std::string& reason) {
  Diagnostics d = validate(g);
  if (!d.ok()) throw InputError("graph is not a valid single-source input");
  try {
    tree.emplace(build_lp_tree(g));
  } catch (const NotLevelPlanarError& e) {
    reason = std::string("graph is not level planar: ") + e.what();
    return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

Verdict solve_partial(const LpTree& t, const PegInstance& p) {
  check_instance(p);
  Verdict v;
  NodeConstraints nc(t);
  for (int w = 0; w < p.graph.vertex_count(); ++w) nc.add_cyclic(w, p.subgraph_rotation.rotation[w]);
  std::optional<ChoiceVector> c = nc.solve();
  if (!c) {
    v.reason = nc.reason();
    return v;
  }
  RotationSystem r = realize(t, *c);
  if (!extends_partial(p, r)) throw std::logic_error("partial embedding solver produced a non-extending embedding");
  v.sat = true;
  v.embedding = std::move(r);
  return v;
}

Verdict solve_partial(const PegInstance& p) {
  check_instance(p);
  std::optional<LpTree> t;
  Verdict v;
  if (!graph_level_planar(p.graph, t, v.reason)) return v;
  return solve_partial(*t, p);
}

Verdict solve_constrained(const ClgInstance& c) {
  check_instance(c);
  std::optional<LpTree> t;
  Verdict v;
  if (!graph_level_planar(c.graph, t, v.reason)) return v;
  OrderTranslator tr(c.graph);
  NodeConstraints nc(*t);
  for (auto [a, b] : c.pairs) {
    ConstraintTriple ct = tr.translate(a, b);
    nc.add_triple(ct.vertex, ct.ccw());
  }
  std::optional<ChoiceVector> choice = nc.solve();
  if (!choice) {
    v.reason = nc.reason();
    return v;
  }
  RotationSystem r = realize(*t, *choice);
  LevelDrawing d = embedding_to_drawing(c.graph, r);
  if (!respects_orders(c, d)) throw std::logic_error("constrained solver produced a drawing that violates an order");
  v.sat = true;
  v.embedding = std::move(r);
  v.drawing = std::move(d);
  return v;
}

Verdict solve_simultaneous(const SefeInstance& s, std::int64_t budget) {
  check_instance(s);
  Verdict v;
  std::optional<LpTree> shared;
  if (!graph_level_planar(s.shared, shared, v.reason)) return v;

  const int m = s.shared.edge_count();
  LevelGraph gi[2] = {sefe_graph(s, 0), sefe_graph(s, 1)};
  std::optional<LpTree> side[2];
  for (int i = 0; i < 2; ++i) {
    try {
      side[i].emplace(build_lp_tree(gi[i]));
    } catch (const NotLevelPlanarError& e) {
      v.reason = "graph " + std::to_string(i + 1) + " alone has no level-planar embedding: " + e.what();
      return v;
    }
  }
  // Walk the side with fewer embeddings; each restriction to the shared graph becomes a
  // partial embedding the other side has to extend.
  int a = count_embeddings(*side[0]) <= count_embeddings(*side[1]) ? 0 : 1;
  int b = 1 - a;
  std::vector<int> shared_edges(m);
  for (int e = 0; e < m; ++e) shared_edges[e] = e;
  std::vector<char> keep_a(gi[a].edge_count(), 0), keep_b(gi[b].edge_count(), 0);
  std::fill(keep_a.begin(), keep_a.begin() + m, 1);
  std::fill(keep_b.begin(), keep_b.begin() + m, 1);
  std::set<std::string> tried;
  std::int64_t candidates = 0;
  enumerate_embeddings(*side[a], [&](const ChoiceVector&, const RotationSystem& ra) {
    RotationSystem common = restrict_rotation(ra, keep_a);
    if (!tried.insert(canonical_form(s.shared, common)).second) return true;
    if (++candidates > budget) throw SearchBudgetError("simultaneous search exceeded its budget");
    PegInstance peg{gi[b], shared_edges, common};
    Verdict pv = solve_partial(*side[b], peg);
    if (!pv.sat) return true;
    v.sat = true;
    v.embedding = common;
    v.augmented[a] = ra;
    v.augmented[b] = *pv.embedding;
    return false;
  });
  if (!v.sat) {
    v.reason = "no shared embedding extends to both graphs";
    return v;
  }
  if (!verify_simultaneous(s, *v.augmented[0], *v.augmented[1]))
    throw std::logic_error("simultaneous solver produced an invalid witness");
  return v;
}

}  // namespace lpt
