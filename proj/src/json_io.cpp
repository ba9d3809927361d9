#include "lpt/json_io.hpp"

#include <algorithm>
#include <numeric>

namespace lpt {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed ") + what + ": " + ex.what());
  }
}

std::vector<int> id_order(const LevelGraph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.id(a) < g.id(b); });
  return order;
}

int edge_between(const LevelGraph& g, const std::string& a, const std::string& b) {
  auto e = g.find_edge(g.vertex_index(a), g.vertex_index(b));
  if (!e) throw InputError("no edge between '" + a + "' and '" + b + "'");
  return *e;
}

std::vector<std::pair<int, int>> vertex_pairs(const LevelGraph& g, const Json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw InputError("expected a pair of vertex ids");
    out.emplace_back(g.vertex_index(p[0].get<std::string>()), g.vertex_index(p[1].get<std::string>()));
  }
  return out;
}

}  // namespace

LevelGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    LevelGraph g;
    for (const auto& v : j.at("vertices")) {
      std::optional<int> demand;
      if (v.contains("demand") && !v["demand"].is_null()) demand = v["demand"].get<int>();
      g.add_vertex(v.at("id").get<std::string>(), v.at("level").get<int>(), demand);
    }
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of vertex ids");
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return g;
  });
}

Json graph_to_json(const LevelGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back({{"id", v.id}, {"level", v.level}, {"demand", v.demand}});
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({g.id(e.tail), g.id(e.head)});
  return j;
}

Json rotation_to_json(const LevelGraph& g, const RotationSystem& r) {
  Json j = Json::object();
  for (int v : id_order(g)) {
    Json list = Json::array();
    for (int e : r.rotation[v]) list.push_back(g.id(g.other(e, v)));
    j[g.id(v)] = list;
  }
  return j;
}

RotationSystem rotation_from_json(const LevelGraph& g, const Json& j) {
  return guarded("rotation", [&] {
    RotationSystem r;
    r.rotation.resize(g.vertex_count());
    for (const auto& [id, list] : j.items()) {
      int v = g.vertex_index(id);
      for (const auto& nb : list) r.rotation[v].push_back(edge_between(g, id, nb.get<std::string>()));
    }
    return r;
  });
}

Json drawing_to_json(const LevelGraph& g, const LevelDrawing& d) {
  Properization p = properize(g);
  Json j = Json::object();
  for (int y = 0; y < static_cast<int>(d.levels.size()); ++y) {
    if (d.levels[y].empty()) continue;
    Json row = Json::array();
    for (int x : d.levels[y]) row.push_back(p.graph.id(x));
    j[std::to_string(y)] = row;
  }
  return j;
}

LevelDrawing drawing_from_json(const LevelGraph& g, const Json& j) {
  return guarded("drawing", [&] {
    Properization p = properize(g);
    LevelDrawing d;
    d.levels.resize(p.graph.max_level() + 1);
    for (const auto& [key, row] : j.items()) {
      int y = std::stoi(key);
      if (y < 0 || y >= static_cast<int>(d.levels.size())) throw InputError("drawing level out of range");
      for (const auto& id : row) d.levels[y].push_back(p.graph.vertex_index(id.get<std::string>()));
    }
    return d;
  });
}

PegInstance peg_from_json(const Json& j) {
  return guarded("partial embedding instance", [&] {
    PegInstance p;
    p.graph = graph_from_json(j.at("graph"));
    for (const auto& e : j.at("subgraph")) {
      if (!e.is_array() || e.size() != 2) throw InputError("subgraph edge must be a pair");
      p.subgraph_edges.push_back(edge_between(p.graph, e[0].get<std::string>(), e[1].get<std::string>()));
    }
    p.subgraph_rotation = rotation_from_json(p.graph, j.value("rotation", Json::object()));
    check_instance(p);
    return p;
  });
}

ClgInstance clg_from_json(const Json& j) {
  return guarded("constrained instance", [&] {
    ClgInstance c;
    c.graph = graph_from_json(j.at("graph"));
    if (j.contains("pairs")) c.pairs = vertex_pairs(c.graph, j["pairs"]);
    // Per-level form: {"orders": {"2": [["a", "b"]], ...}}.
    if (j.contains("orders")) {
      for (const auto& [level, list] : j["orders"].items()) {
        for (auto [u, v] : vertex_pairs(c.graph, list)) {
          if (std::to_string(c.graph.level(u)) != level || c.graph.level(v) != c.graph.level(u))
            throw InputError("pair (" + c.graph.id(u) + ", " + c.graph.id(v) + ") is not on level " + level);
          c.pairs.emplace_back(u, v);
        }
      }
    }
    if (!j.contains("pairs") && !j.contains("orders")) throw InputError("expected \"pairs\" or \"orders\"");
    check_instance(c);
    return c;
  });
}

SefeInstance sefe_from_json(const Json& j) {
  return guarded("simultaneous instance", [&] {
    SefeInstance s;
    s.shared = graph_from_json(j.at("graph"));
    s.exclusive[0] = vertex_pairs(s.shared, j.value("exclusive1", Json::array()));
    s.exclusive[1] = vertex_pairs(s.shared, j.value("exclusive2", Json::array()));
    check_instance(s);
    return s;
  });
}

}  // namespace lpt
