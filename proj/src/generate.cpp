#include "lpt/generate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace lpt {

namespace {

std::string vertex_name(int i) {
  static const std::string letters = "abcdefghijklmnopqruvwxyz";  // no s or t
  if (i == 0) return "s";
  const int base = static_cast<int>(letters.size());
  std::string name;
  int k = i - 1;
  do {
    name.insert(name.begin(), letters[k % base]);
    k = k / base - 1;
  } while (k >= 0);
  return name;
}

}  // namespace

std::optional<LevelGraph> random_instance(const RandomGraphOptions& opt, std::mt19937_64& rng) {
  int n = std::max(2, opt.vertices);
  int levels = std::max(2, opt.levels);
  std::uniform_int_distribution<int> level_dist(2, levels);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<int> lvl(n, 1);
  for (int i = 1; i < n; ++i) lvl[i] = level_dist(rng);
  std::sort(lvl.begin() + 1, lvl.end());
  int top = *std::max_element(lvl.begin(), lvl.end());

  LevelGraph g;
  for (int i = 0; i < n; ++i) {
    std::optional<int> demand;
    if (i > 0 && coin(rng) < opt.demand_chance && lvl[i] < top) {
      // Demand strictly between the level and the super-sink level.
      std::uniform_int_distribution<int> dd(lvl[i], top);
      demand = dd(rng);
    }
    g.add_vertex(vertex_name(i), lvl[i], demand);
  }
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::vector<int> lower;
    for (int u = 0; u < n; ++u)
      if (lvl[u] < lvl[v]) lower.push_back(u);
    std::uniform_int_distribution<size_t> pick(0, lower.size() - 1);
    edges.emplace(lower[pick(rng)], v);
    for (int u : lower)
      if (coin(rng) < opt.extra_edges) edges.emplace(u, v);
  }
  for (auto [u, v] : edges) g.add_edge(u, v);
  LevelGraph h = add_super_sink(g);
  Diagnostics d = validate(h);
  if (!d.ok()) return std::nullopt;
  return h;
}

LevelGraph random_instance_retry(const RandomGraphOptions& opt, std::mt19937_64& rng) {
  for (;;)
    if (auto g = random_instance(opt, rng)) return *g;
}

namespace {

struct CorpusEnumerator {
  int max_vertices, max_levels;
  const std::function<void(const LevelGraph&)>& visit;
  std::set<std::vector<std::uint64_t>> seen;

  void run() {
    for (int n = 2; n <= max_vertices; ++n) {
      std::vector<int> lvl(n, 1);
      levels(lvl, 1, 2);
    }
  }

  // Non-decreasing level assignment for vertices 1..n-1.
  void levels(std::vector<int>& lvl, int i, int from) {
    int n = static_cast<int>(lvl.size());
    if (i == n) {
      graphs(lvl);
      return;
    }
    for (int l = from; l <= max_levels; ++l) {
      lvl[i] = l;
      levels(lvl, i + 1, l);
    }
  }

  void graphs(const std::vector<int>& lvl) {
    int n = static_cast<int>(lvl.size());
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (lvl[u] < lvl[v]) slots.emplace_back(u, v);
    int k = static_cast<int>(slots.size());
    // Vertex groups that may be permuted among themselves.
    std::vector<std::vector<int>> perms;
    {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = i;
      std::vector<std::pair<int, int>> blocks;
      for (int i = 0; i < n;) {
        int j = i;
        while (j < n && lvl[j] == lvl[i]) ++j;
        blocks.emplace_back(i, j);
        i = j;
      }
      std::function<void(size_t)> rec = [&](size_t bi) {
        if (bi == blocks.size()) {
          perms.push_back(p);
          return;
        }
        auto [a, b] = blocks[bi];
        std::sort(p.begin() + a, p.begin() + b);
        do rec(bi + 1);
        while (std::next_permutation(p.begin() + a, p.begin() + b));
      };
      rec(0);
    }
    std::map<std::pair<int, int>, int> slot_index;
    for (int i = 0; i < k; ++i) slot_index[slots[i]] = i;

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
      // Every non-source vertex needs an incoming edge.
      std::vector<char> has_in(n, 0);
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) has_in[slots[i].second] = 1;
      bool ok = true;
      for (int v = 1; v < n && ok; ++v) ok = has_in[v];
      if (!ok) continue;
      std::uint64_t best = mask;
      for (const auto& p : perms) {
        std::uint64_t m2 = 0;
        for (int i = 0; i < k; ++i)
          if (mask >> i & 1) m2 |= std::uint64_t(1) << slot_index[{p[slots[i].first], p[slots[i].second]}];
        best = std::min(best, m2);
      }
      if (best != mask) continue;
      LevelGraph g;
      for (int i = 0; i < n; ++i) g.add_vertex(vertex_name(i), lvl[i]);
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
      LevelGraph h = add_super_sink(g);
      if (!validate(h).ok()) continue;
      visit(h);
    }
  }
};

}  // namespace

void for_each_corpus_graph(int max_vertices, int max_levels, const std::function<void(const LevelGraph&)>& visit) {
  CorpusEnumerator e{max_vertices, max_levels, visit, {}};
  e.run();
}

BenchInstance bench_instance(int n, std::uint64_t seed, double sink_fraction) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    int body = std::max(3, n - 1);
    int levels = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(body))));
    // Level 1 holds s alone; the rest is spread over levels 2..levels.
    std::vector<std::vector<int>> rows(levels + 1);
    LevelGraph g;
    int next = 0;
    auto fresh = [&](int level) {
      int v = g.add_vertex(next == 0 ? std::string("s") : "v" + std::to_string(next), level);
      ++next;
      return v;
    };
    rows[1].push_back(fresh(1));
    int remaining = body - 1;
    for (int l = 2; l <= levels; ++l) {
      int left = levels - l + 1;
      int width = std::max(1, remaining / left);
      for (int i = 0; i < width; ++i) rows[l].push_back(fresh(l));
      remaining -= width;
    }
    // Staircases between consecutive rows. A hung sink sits between two consecutive
    // lower vertices; it joins the drawing but not the next staircase.
    std::vector<std::vector<int>> drawn(levels + 1);
    drawn[1] = rows[1];
    for (int l = 1; l < levels; ++l) {
      const auto& lo = rows[l];
      const auto& hi = rows[l + 1];
      auto& out = drawn[l + 1];
      size_t a = 0, b = 0;
      out.push_back(hi[0]);
      g.add_edge(lo[0], hi[0]);
      while (a + 1 < lo.size() || b + 1 < hi.size()) {
        bool move_a = b + 1 >= hi.size() || (a + 1 < lo.size() && coin(rng) < 0.5);
        if (move_a && b + 1 < hi.size() && l + 1 < levels && coin(rng) < sink_fraction) {
          int x = fresh(l + 1);
          g.add_edge(lo[a], x);
          g.add_edge(lo[a + 1], x);
          out.push_back(x);
          ++a;
          ++b;
          g.add_edge(lo[a], hi[b]);
          out.push_back(hi[b]);
        } else if (move_a) {
          ++a;
          g.add_edge(lo[a], hi[b]);
        } else {
          ++b;
          g.add_edge(lo[a], hi[b]);
          out.push_back(hi[b]);
        }
      }
    }
    int t = g.add_vertex("t", levels + 1);
    for (int v : rows[levels]) g.add_edge(v, t);
    int st = g.add_edge(0, t);
    if (!validate(g).ok()) {
      rng.seed(rng());
      continue;
    }
    Properization p = properize(g);
    LevelDrawing d;
    d.levels.resize(levels + 2);
    const auto& chain = p.chain[st];
    for (int l = 1; l <= levels + 1; ++l) {
      if (l > 1 && l <= levels) d.levels[l].push_back(chain[l - 1]);
      if (l <= levels)
        for (int v : drawn[l]) d.levels[l].push_back(v);
    }
    d.levels[levels + 1].push_back(t);
    BenchInstance inst;
    inst.embedding = drawing_to_embedding(g, d);
    inst.drawing = std::move(d);
    inst.graph = std::move(g);
    return inst;
  }
}

ChoiceVector random_choice(const LpTree& t, std::mt19937_64& rng) {
  ChoiceVector c = identity_choice(t);
  for (auto& perm : c.order) std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (auto& f : c.flip) f = coin(rng) ? 1 : 0;
  return c;
}

PegInstance random_peg(const LpTree& t, std::mt19937_64& rng, double keep) {
  const LevelGraph& g = t.graph;
  PegInstance p;
  p.graph = g;
  std::bernoulli_distribution take(keep);
  std::vector<char> in_h(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (take(rng)) {
      in_h[e] = 1;
      p.subgraph_edges.push_back(e);
    }
  RotationSystem r = realize(t, random_choice(t, rng));
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: break;
    case 1: r = reflect(r); break;
    default:
      for (auto& rot : r.rotation) std::shuffle(rot.begin(), rot.end(), rng);
  }
  p.subgraph_rotation = restrict_rotation(r, in_h);
  return p;
}

ClgInstance random_clg(const LevelGraph& g, std::mt19937_64& rng, int max_pairs) {
  ClgInstance c;
  c.graph = g;
  std::map<int, std::vector<int>> by_level;
  for (int v = 0; v < g.vertex_count(); ++v) by_level[g.level(v)].push_back(v);
  std::vector<int> wide;
  for (const auto& [l, vs] : by_level)
    if (vs.size() >= 2) wide.push_back(l);
  if (wide.empty()) return c;
  int k = std::uniform_int_distribution<int>(0, max_pairs)(rng);
  for (int i = 0; i < k; ++i) {
    const auto& vs = by_level[wide[std::uniform_int_distribution<size_t>(0, wide.size() - 1)(rng)]];
    std::uniform_int_distribution<size_t> pick(0, vs.size() - 1);
    int u = vs[pick(rng)], v = vs[pick(rng)];
    if (u != v) c.pairs.emplace_back(u, v);
  }
  return c;
}

SefeInstance random_sefe(const LevelGraph& shared, std::mt19937_64& rng, int max_exclusive) {
  SefeInstance s;
  s.shared = shared;
  std::set<std::pair<int, int>> used;
  for (const auto& e : shared.edges()) used.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head));
  std::vector<std::pair<int, int>> free;
  for (int a = 0; a < shared.vertex_count(); ++a)
    for (int b = 0; b < shared.vertex_count(); ++b)
      if (shared.level(a) < shared.level(b) && !used.count({std::min(a, b), std::max(a, b)})) free.emplace_back(a, b);
  std::shuffle(free.begin(), free.end(), rng);
  int k = std::min<int>(static_cast<int>(free.size()), std::uniform_int_distribution<int>(0, max_exclusive)(rng));
  std::bernoulli_distribution side(0.5);
  for (int i = 0; i < k; ++i) s.exclusive[side(rng) ? 1 : 0].push_back(free[i]);
  return s;
}

}  // namespace lpt
