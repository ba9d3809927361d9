#include "lpt/oracle.hpp"

#include <algorithm>

namespace lpt {

namespace {

class DrawingSearch {
 public:
  DrawingSearch(const LevelGraph& g, const std::function<void(const LevelDrawing&, const RotationSystem&)>& visit)
      : g_(g), p_(properize(g)), visit_(visit) {
    const LevelGraph& q = p_.graph;
    int n = q.vertex_count();
    top_ = q.max_level();
    bottom_ = q.min_level();
    by_level_.resize(top_ + 1);
    for (int x = 0; x < n; ++x) by_level_[q.level(x)].push_back(x);
    in_.resize(n);
    for (const auto& e : q.edges()) in_[e.head].push_back(e.tail);
    pinned_.assign(top_ + 1, -1);
    auto sources = g.sources();
    auto apex = g.unique_apex();
    if (sources.size() == 1 && apex)
      if (auto st = g.find_edge(sources[0], *apex)) {
        const auto& ch = p_.chain[*st];
        for (size_t i = 1; i + 1 < ch.size(); ++i) pinned_[q.level(ch[i])] = ch[i];
      }
    check_demands_ = false;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.demand(v) > g.level(v)) check_demands_ = true;
    pos_.assign(n, -1);
    drawing_.levels.resize(top_ + 1);
  }

  void run() { place(bottom_); }

 private:
  void place(int y) {
    while (y <= top_ && by_level_[y].empty()) ++y;
    if (y > top_) {
      emit();
      return;
    }
    fill(y, 0);
  }

  // Extends the order of level y; `bound` is the largest in-neighbor position used so far.
  void fill(int y, int bound) {
    auto& row = drawing_.levels[y];
    if (row.size() == by_level_[y].size()) {
      place(y + 1);
      return;
    }
    for (int x : by_level_[y]) {
      if (pos_[x] >= 0) continue;
      if (pinned_[y] >= 0 && row.empty() && x != pinned_[y]) continue;
      int lo = 1 << 30, hi = -1;
      for (int a : in_[x]) {
        lo = std::min(lo, pos_[a]);
        hi = std::max(hi, pos_[a]);
      }
      if (!in_[x].empty() && lo < bound) continue;
      pos_[x] = static_cast<int>(row.size());
      row.push_back(x);
      fill(y, std::max(bound, hi));
      row.pop_back();
      pos_[x] = -1;
    }
  }

  void emit() {
    RotationSystem r;
    r.rotation.resize(g_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) {
      std::vector<std::pair<int, int>> in, out;
      for (int e : g_.incident(v)) {
        const auto& ch = p_.chain[e];
        if (g_.edge(e).head == v) in.emplace_back(pos_[ch[ch.size() - 2]], e);
        else out.emplace_back(pos_[ch[1]], e);
      }
      std::sort(in.begin(), in.end());
      std::sort(out.begin(), out.end(), std::greater<>());
      for (auto& pr : in) r.rotation[v].push_back(pr.second);
      for (auto& pr : out) r.rotation[v].push_back(pr.second);
    }
    if (check_demands_ && !level_planar_faces(g_, trace_faces_unchecked(g_, r))) return;
    visit_(drawing_, r);
  }

  const LevelGraph& g_;
  Properization p_;
  const std::function<void(const LevelDrawing&, const RotationSystem&)>& visit_;
  int top_ = 0, bottom_ = 0;
  std::vector<std::vector<int>> by_level_;
  std::vector<std::vector<int>> in_;
  std::vector<int> pinned_;
  std::vector<int> pos_;
  bool check_demands_ = false;
  LevelDrawing drawing_;
};

}  // namespace

void for_each_level_planar_drawing(const LevelGraph& g, int guard,
                                   const std::function<void(const LevelDrawing&, const RotationSystem&)>& visit) {
  if (g.vertex_count() > guard)
    throw InputError("oracle size guard exceeded (" + std::to_string(g.vertex_count()) + " > " +
                     std::to_string(guard) + " vertices)");
  DrawingSearch search(g, visit);
  search.run();
}

EmbeddingSet brute_force_embeddings(const LevelGraph& g, int guard) {
  EmbeddingSet set;
  for_each_level_planar_drawing(g, guard, [&](const LevelDrawing& d, const RotationSystem& r) {
    set.entries.try_emplace(canonical_form(g, r), OracleEntry{r, d});
  });
  return set;
}

Verdict brute_force_verdict(const PegInstance& p, int guard) {
  check_instance(p);
  Verdict v;
  for (const auto& [key, entry] : brute_force_embeddings(p.graph, guard).entries)
    if (extends_partial(p, entry.rotation)) {
      v.sat = true;
      v.embedding = entry.rotation;
      return v;
    }
  v.reason = "no level-planar embedding extends the partial embedding";
  return v;
}

Verdict brute_force_verdict(const ClgInstance& c, int guard) {
  check_instance(c);
  Verdict v;
  for (const auto& [key, entry] : brute_force_embeddings(c.graph, guard).entries)
    if (respects_orders(c, entry.drawing)) {
      v.sat = true;
      v.embedding = entry.rotation;
      v.drawing = entry.drawing;
      return v;
    }
  v.reason = "no level-planar drawing respects the orders";
  return v;
}

Verdict brute_force_verdict(const SefeInstance& s, int guard) {
  check_instance(s);
  int m = s.shared.edge_count();
  std::vector<char> keep[2];
  std::map<std::string, RotationSystem> side[2];
  for (int i = 0; i < 2; ++i) {
    LevelGraph gi = sefe_graph(s, i);
    keep[i].assign(gi.edge_count(), 0);
    std::fill(keep[i].begin(), keep[i].begin() + m, 1);
    for (const auto& [key, entry] : brute_force_embeddings(gi, guard).entries) {
      RotationSystem shared = restrict_rotation(entry.rotation, keep[i]);
      side[i].try_emplace(canonical_form(s.shared, shared), entry.rotation);
    }
  }
  Verdict v;
  for (const auto& [key, r0] : side[0]) {
    auto it = side[1].find(key);
    if (it == side[1].end()) continue;
    v.sat = true;
    v.embedding = restrict_rotation(r0, keep[0]);
    v.augmented[0] = r0;
    v.augmented[1] = it->second;
    return v;
  }
  v.reason = "no shared embedding extends to both graphs";
  return v;
}

}  // namespace lpt
