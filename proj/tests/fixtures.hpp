#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lpt/embedding.hpp"

namespace fixtures {

struct V {
  const char* id;
  int level;
};

inline lpt::LevelGraph make(std::initializer_list<V> vs, std::initializer_list<std::pair<const char*, const char*>> es) {
  lpt::LevelGraph g;
  for (const auto& v : vs) g.add_vertex(v.id, v.level);
  for (const auto& [a, b] : es) g.add_edge(a, b);
  return g;
}

inline lpt::LevelGraph d1() {
  return make({{"s", 1}, {"a", 2}, {"b", 2}, {"t", 3}},
              {{"s", "a"}, {"s", "b"}, {"a", "t"}, {"b", "t"}, {"s", "t"}});
}

inline lpt::LevelGraph p1() {
  return make({{"s", 1}, {"a", 2}, {"b", 2}, {"v", 3}, {"x", 4}, {"t", 5}},
              {{"s", "v"}, {"s", "a"}, {"a", "v"}, {"s", "b"}, {"b", "v"}, {"b", "x"}, {"v", "x"}, {"v", "t"}, {"s", "t"}});
}

inline lpt::LevelGraph r2() {
  return make({{"s", 1}, {"p", 2}, {"q", 3}, {"y", 4}, {"z", 5}, {"t", 6}},
              {{"s", "p"}, {"s", "q"}, {"s", "t"}, {"p", "t"}, {"q", "t"}, {"p", "y"}, {"p", "z"}, {"q", "y"}, {"q", "z"}, {"y", "z"}});
}

// Rotation given as neighbor ids counter-clockwise per vertex.
inline lpt::RotationSystem rotation(const lpt::LevelGraph& g,
                                    std::initializer_list<std::pair<const char*, std::vector<std::string>>> rows) {
  lpt::RotationSystem r;
  r.rotation.resize(g.vertex_count());
  for (const auto& [v, nbs] : rows) {
    int vi = g.vertex_index(v);
    for (const auto& nb : nbs) r.rotation[vi].push_back(*g.find_edge(vi, g.vertex_index(nb)));
  }
  return r;
}

inline int edge(const lpt::LevelGraph& g, const char* a, const char* b) {
  return *g.find_edge(g.vertex_index(a), g.vertex_index(b));
}

}  // namespace fixtures
