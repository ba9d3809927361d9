#include "lpt/embedding.hpp"

#include <algorithm>
#include <list>
#include <numeric>

namespace lpt {

int dart_source(const LevelGraph& g, int d) {
  const Edge& e = g.edge(dart_edge(d));
  return (d & 1) ? e.head : e.tail;
}

int dart_target(const LevelGraph& g, int d) {
  const Edge& e = g.edge(dart_edge(d));
  return (d & 1) ? e.tail : e.head;
}

void check_rotation_system(const LevelGraph& g, const RotationSystem& r) {
  if (static_cast<int>(r.rotation.size()) != g.vertex_count())
    throw InputError("rotation system has wrong vertex count");
  std::vector<int> seen(2 * g.edge_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int e : r.rotation[v]) {
      if (e < 0 || e >= g.edge_count()) throw InputError("rotation references unknown edge");
      const Edge& ed = g.edge(e);
      if (ed.tail != v && ed.head != v) throw InputError("rotation lists a non-incident edge");
      if (++seen[dart_of(e, ed.tail == v)] > 1) throw InputError("edge repeated in a rotation");
    }
    if (r.rotation[v].size() != g.incident(v).size()) throw InputError("rotation misses an edge");
  }
}

namespace {

// Position of each dart's source end inside its source vertex's rotation.
std::vector<int> rotation_positions(const LevelGraph& g, const RotationSystem& r) {
  std::vector<int> pos(2 * g.edge_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = r.rotation[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      int e = rot[i];
      pos[dart_of(e, g.edge(e).tail == v)] = i;
    }
  }
  return pos;
}

int count_components(const LevelGraph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = g.vertex_count();
  for (const auto& e : g.edges()) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace

FaceSet trace_faces_unchecked(const LevelGraph& g, const RotationSystem& r) {
  FaceSet fs;
  int m = g.edge_count();
  auto pos = rotation_positions(g, r);
  fs.face_of_dart.assign(2 * m, -1);
  for (int start = 0; start < 2 * m; ++start) {
    if (fs.face_of_dart[start] >= 0) continue;
    int fid = static_cast<int>(fs.faces.size());
    Face f;
    int d = start;
    int guard = 0;
    while (fs.face_of_dart[d] < 0) {
      fs.face_of_dart[d] = fid;
      f.darts.push_back(d);
      int v = dart_target(g, d);
      const auto& rot = r.rotation[v];
      int p = pos[dart_twin(d)];
      int e2 = rot[(p + static_cast<int>(rot.size()) - 1) % rot.size()];
      d = dart_of(e2, g.edge(e2).tail == v);
      if (++guard > 2 * m) break;
    }
    f.apex_level = 0;
    for (int dd : f.darts) f.apex_level = std::max(f.apex_level, g.level(dart_source(g, dd)));
    for (int dd : f.darts) {
      int v = dart_source(g, dd);
      if (g.level(v) == f.apex_level &&
          std::find(f.apex_vertices.begin(), f.apex_vertices.end(), v) == f.apex_vertices.end())
        f.apex_vertices.push_back(v);
    }
    fs.faces.push_back(std::move(f));
  }
  int isolated = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.incident(v).empty()) ++isolated;
  int faces = static_cast<int>(fs.faces.size()) + isolated;
  fs.euler_ok = g.vertex_count() - m + faces == 1 + count_components(g);
  auto sources = g.sources();
  auto apex = g.unique_apex();
  if (sources.size() == 1 && apex) {
    if (auto st = g.find_edge(sources[0], *apex)) {
      fs.outer = fs.face_of_dart[dart_of(*st, true)];
      fs.faces[fs.outer].outer = true;
    }
  }
  return fs;
}

FaceSet trace_faces(const LevelGraph& g, const RotationSystem& r) {
  check_rotation_system(g, r);
  FaceSet fs = trace_faces_unchecked(g, r);
  if (!fs.euler_ok) throw NotPlanarError("rotation system is not planar (Euler check failed)");
  return fs;
}

bool is_planar_rotation(const LevelGraph& g, const RotationSystem& r) {
  return trace_faces_unchecked(g, r).euler_ok;
}

bool level_planar_faces(const LevelGraph& g, const FaceSet& faces) {
  std::vector<int> best(g.vertex_count(), 0);
  for (int d = 0; d < static_cast<int>(faces.face_of_dart.size()); ++d) {
    int v = dart_source(g, d);
    best[v] = std::max(best[v], faces.faces[faces.face_of_dart[d]].apex_level);
  }
  int k = g.max_level();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.level(v) >= k) continue;
    // A vertex needs an incident face whose apex lies strictly above its demand.
    if (best[v] <= g.demand(v)) return false;
  }
  return true;
}

bool is_level_planar_embedding(const LevelGraph& g, const RotationSystem& r) {
  if (g.sources().size() != 1) throw InputError("level-planarity test needs a single source");
  if (!g.unique_apex()) throw InputError("level-planarity test needs a unique apex");
  FaceSet fs = trace_faces(g, r);
  return level_planar_faces(g, fs);
}

RotationSystem reflect(const RotationSystem& r) {
  RotationSystem out = r;
  for (auto& rot : out.rotation) std::reverse(rot.begin(), rot.end());
  return out;
}

StAugmentation st_augment(const LevelGraph& g, const RotationSystem& r) {
  check_rotation_system(g, r);
  StAugmentation aug;
  aug.graph = g;
  aug.rotation = r;
  auto apex = g.unique_apex();
  if (!apex) throw InputError("st-augmentation needs a unique apex");
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == *apex || g.out_degree(w) > 0) continue;
    FaceSet fs = trace_faces(aug.graph, aug.rotation);
    int best_face = -1, best_apex = -1;
    for (int e : aug.rotation.rotation[w]) {
      int d = dart_of(e, aug.graph.edge(e).tail == w);
      int f = fs.face_of_dart[d];
      const Face& face = fs.faces[f];
      int a = *std::min_element(face.apex_vertices.begin(), face.apex_vertices.end(),
                                [&](int x, int y) { return g.id(x) < g.id(y); });
      if (best_face < 0 || face.apex_level > fs.faces[best_face].apex_level ||
          (face.apex_level == fs.faces[best_face].apex_level && g.id(a) < g.id(best_apex))) {
        best_face = f;
        best_apex = a;
      }
    }
    if (best_face < 0 || fs.faces[best_face].apex_level <= g.level(w))
      throw NotLevelPlanarError("sink '" + g.id(w) + "' has no incident face with a higher apex");
    // Insert the new edge into the angle of the chosen face at w and at the apex.
    const Face& face = fs.faces[best_face];
    auto entering_edge = [&](int v) {
      for (int d : face.darts)
        if (dart_target(aug.graph, d) == v) return dart_edge(d);
      return -1;
    };
    int in_w = entering_edge(w);
    int in_a = entering_edge(best_apex);
    int ne = aug.graph.add_edge(w, best_apex);
    aug.rotation.rotation.resize(aug.graph.vertex_count());
    auto insert_before = [&](int v, int before, int edge) {
      auto& rot = aug.rotation.rotation[v];
      rot.insert(std::find(rot.begin(), rot.end(), before), edge);
    };
    insert_before(w, in_w, ne);
    insert_before(best_apex, in_a, ne);
    aug.added_edges.push_back(ne);
  }
  return aug;
}

LevelDrawing embedding_to_drawing(const LevelGraph& g, const RotationSystem& r) {
  StAugmentation aug = st_augment(g, r);
  const LevelGraph& h = aug.graph;
  const auto& rot = aug.rotation.rotation;
  int s = h.source();
  int t = *h.unique_apex();
  auto st = h.find_edge(s, t);
  if (!st) throw InputError("drawing construction needs the edge (s,t)");

  // Outgoing edges of every vertex from left to right.
  std::vector<std::vector<int>> outs(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) {
    const auto& rv = rot[v];
    int deg = static_cast<int>(rv.size());
    auto is_out = [&](int e) { return h.edge(e).tail == v; };
    int start = -1;
    if (v == s) {
      start = static_cast<int>(std::find(rv.begin(), rv.end(), *st) - rv.begin());
      for (int i = 0; i < deg; ++i) outs[v].push_back(rv[(start - i + deg) % deg]);
      continue;
    }
    for (int i = 0; i < deg; ++i)
      if (is_out(rv[i]) && !is_out(rv[(i + deg - 1) % deg])) {
        if (start >= 0) throw InputError("embedding is not bimodal");
        start = i;
      }
    if (start < 0) continue;
    std::vector<int> block;
    for (int i = 0; i < deg && is_out(rv[(start + i) % deg]); ++i) block.push_back(rv[(start + i) % deg]);
    outs[v].assign(block.rbegin(), block.rend());
  }

  Properization p = properize(h);
  int k = h.max_level();
  std::vector<std::list<int>> lists(k + 1);
  std::vector<std::list<int>::iterator> frontier(k + 1);
  for (int x : p.chain[*st]) {
    int y = p.graph.level(x);
    frontier[y] = lists[y].insert(lists[y].end(), x);
  }
  std::vector<char> discovered(h.vertex_count(), 0);
  std::vector<int> next_out(h.vertex_count(), 0);
  discovered[s] = discovered[t] = 1;
  next_out[s] = 1;
  std::vector<int> stack{s};
  while (!stack.empty()) {
    int u = stack.back();
    if (next_out[u] >= static_cast<int>(outs[u].size())) {
      stack.pop_back();
      continue;
    }
    std::vector<int> fresh;
    int cur = u;
    while (true) {
      int e = outs[cur][next_out[cur]++];
      int head = h.edge(e).head;
      const auto& ch = p.chain[e];
      int stop = discovered[head] ? static_cast<int>(ch.size()) - 1 : static_cast<int>(ch.size());
      for (int i = 1; i < stop; ++i) {
        int y = p.graph.level(ch[i]);
        frontier[y] = lists[y].insert(std::next(frontier[y]), ch[i]);
      }
      if (discovered[head]) break;
      discovered[head] = 1;
      fresh.push_back(head);
      cur = head;
    }
    for (int v : fresh) stack.push_back(v);
  }

  int limit = properize(g).graph.vertex_count();
  LevelDrawing d;
  d.levels.resize(g.max_level() + 1);
  int placed = 0;
  for (int y = 0; y <= g.max_level() && y <= k; ++y)
    for (int x : lists[y])
      if (x < limit) {
        d.levels[y].push_back(x);
        ++placed;
      }
  if (placed != limit) throw InputError("drawing construction did not place every vertex");
  return d;
}

namespace {

// Positions of properized vertices; throws unless every vertex sits once on its own level.
std::vector<int> drawing_positions(const Properization& p, const LevelDrawing& d) {
  int n = p.graph.vertex_count();
  std::vector<int> pos(n, -1);
  for (int y = 0; y < static_cast<int>(d.levels.size()); ++y)
    for (int i = 0; i < static_cast<int>(d.levels[y].size()); ++i) {
      int x = d.levels[y][i];
      if (x < 0 || x >= n || p.graph.level(x) != y || pos[x] >= 0)
        throw InputError("drawing places a vertex wrongly");
      pos[x] = i;
    }
  for (int x = 0; x < n; ++x)
    if (pos[x] < 0) throw InputError("drawing misses a vertex");
  return pos;
}

bool has_crossing(const Properization& p, const std::vector<int>& pos) {
  const LevelGraph& q = p.graph;
  std::vector<std::vector<std::pair<int, int>>> by_level(q.max_level() + 1);
  for (const auto& e : q.edges()) by_level[q.level(e.tail)].emplace_back(pos[e.tail], pos[e.head]);
  for (auto& pairs : by_level) {
    std::sort(pairs.begin(), pairs.end());
    for (size_t i = 1; i < pairs.size(); ++i)
      if (pairs[i].second < pairs[i - 1].second) return true;
  }
  return false;
}

RotationSystem rotation_from_positions(const LevelGraph& g, const Properization& p,
                                       const std::vector<int>& pos) {
  RotationSystem r;
  r.rotation.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<int, int>> in, out;
    for (int e : g.incident(v)) {
      const auto& ch = p.chain[e];
      if (g.edge(e).head == v) in.emplace_back(pos[ch[ch.size() - 2]], e);
      else out.emplace_back(pos[ch[1]], e);
    }
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    for (auto& [k, e] : in) r.rotation[v].push_back(e);
    for (auto& [k, e] : out) r.rotation[v].push_back(e);
  }
  return r;
}

}  // namespace

RotationSystem drawing_to_embedding(const LevelGraph& g, const LevelDrawing& d) {
  Properization p = properize(g);
  auto pos = drawing_positions(p, d);
  if (has_crossing(p, pos)) throw InputError("drawing has crossings");
  return rotation_from_positions(g, p, pos);
}

bool is_level_planar_drawing(const LevelGraph& g, const LevelDrawing& d) {
  Properization p = properize(g);
  std::vector<int> pos;
  try {
    pos = drawing_positions(p, d);
  } catch (const InputError&) {
    return false;
  }
  if (has_crossing(p, pos)) return false;
  RotationSystem r = rotation_from_positions(g, p, pos);
  return level_planar_faces(g, trace_faces_unchecked(g, r));
}

std::string canonical_form(const LevelGraph& g, const RotationSystem& r) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.id(a) < g.id(b); });
  std::string key;
  for (int v : order) {
    const auto& rot = r.rotation[v];
    key += g.id(v);
    key += '(';
    if (!rot.empty()) {
      size_t start = 0;
      for (size_t i = 1; i < rot.size(); ++i)
        if (g.id(g.other(rot[i], v)) < g.id(g.other(rot[start], v))) start = i;
      for (size_t i = 0; i < rot.size(); ++i) {
        if (i) key += ',';
        key += g.id(g.other(rot[(start + i) % rot.size()], v));
      }
    }
    key += ')';
  }
  return key;
}

RotationSystem strip_super_sink(const LevelGraph& original, const LevelGraph& extended,
                                const RotationSystem& r) {
  check_rotation_system(extended, r);
  if (extended.vertex_count() != original.vertex_count() + 1)
    throw InputError("extended graph does not have exactly one extra vertex");
  RotationSystem out;
  out.rotation.resize(original.vertex_count());
  for (int v = 0; v < original.vertex_count(); ++v) {
    if (extended.id(v) != original.id(v)) throw InputError("vertex ids do not line up");
    for (int e : r.rotation[v])
      if (e < original.edge_count()) out.rotation[v].push_back(e);
  }
  return out;
}

RotationSystem restrict_rotation(const RotationSystem& r, const std::vector<char>& keep) {
  RotationSystem out;
  out.rotation.resize(r.rotation.size());
  for (size_t v = 0; v < r.rotation.size(); ++v)
    for (int e : r.rotation[v])
      if (keep[e]) out.rotation[v].push_back(e);
  return out;
}

bool ccw_ordered(const std::vector<int>& rotation, int a, int b, int c) {
  int n = static_cast<int>(rotation.size());
  int pa = -1, pb = -1, pc = -1;
  for (int i = 0; i < n; ++i) {
    if (rotation[i] == a) pa = i;
    if (rotation[i] == b) pb = i;
    if (rotation[i] == c) pc = i;
  }
  if (pa < 0 || pb < 0 || pc < 0) throw InputError("edge not in rotation");
  return (pb - pa + n) % n < (pc - pa + n) % n;
}

}  // namespace lpt
