#include <doctest.h>

#include "fixtures.hpp"
#include "lpt/oracle.hpp"

using namespace lpt;

TEST_CASE("oracle counts on the fixtures") {
  CHECK(brute_force_embeddings(fixtures::d1()).count() == 2);
  CHECK(brute_force_embeddings(fixtures::p1()).count() == 4);
  CHECK(brute_force_embeddings(fixtures::r2()).count() == 2);
}

TEST_CASE("oracle size guard") {
  LevelGraph g;
  g.add_vertex("s", 1);
  for (int i = 0; i < 11; ++i) {
    g.add_vertex("v" + std::to_string(i), 2);
    g.add_edge("s", "v" + std::to_string(i));
  }
  CHECK_THROWS_AS(brute_force_embeddings(g), InputError);
  CHECK_THROWS_AS(brute_force_embeddings(g, 11), InputError);

  LevelGraph small;
  small.add_vertex("s", 1);
  for (int i = 0; i < 4; ++i) {
    small.add_vertex("v" + std::to_string(i), 2);
    small.add_edge("s", "v" + std::to_string(i));
  }
  CHECK_THROWS_AS(brute_force_embeddings(small, 4), InputError);
  CHECK(brute_force_embeddings(small, 5).count() == 6);
}

TEST_CASE("R2 keeps z facing t in every oracle embedding") {
  auto g = fixtures::r2();
  auto set = brute_force_embeddings(g);
  int z = g.vertex_index("z"), t = g.vertex_index("t");
  for (const auto& [key, entry] : set.entries) {
    auto fs = trace_faces(g, entry.rotation);
    bool z_sees_t = false;
    for (int d = 0; d < static_cast<int>(fs.face_of_dart.size()); ++d)
      if (dart_source(g, d) == z)
        for (int v : fs.faces[fs.face_of_dart[d]].apex_vertices) z_sees_t |= v == t;
    CHECK(z_sees_t);
  }
}

TEST_CASE("P1 with the tall child between the short ones is not level planar") {
  auto g = fixtures::p1();
  auto p = properize(g);
  // Level 2 holds the dummies of (s,v) and (s,t) besides a and b.
  int a = g.vertex_index("a"), b = g.vertex_index("b");
  int sv = p.chain[fixtures::edge(g, "s", "v")][1];
  int st2 = p.chain[fixtures::edge(g, "s", "t")][1];
  int st3 = p.chain[fixtures::edge(g, "s", "t")][2];
  int st4 = p.chain[fixtures::edge(g, "s", "t")][3];
  int bx = p.chain[fixtures::edge(g, "b", "x")][1];
  int vt = p.chain[fixtures::edge(g, "v", "t")][1];
  int s = g.vertex_index("s"), v = g.vertex_index("v"), x = g.vertex_index("x"), t = g.vertex_index("t");
  LevelDrawing d;
  d.levels = {{}, {s}, {st2, sv, b, a}, {st3, bx, v}, {st4, x, vt}, {t}};
  CHECK_FALSE(is_level_planar_drawing(g, d));
  d.levels = {{}, {s}, {st2, b, sv, a}, {st3, bx, v}, {st4, x, vt}, {t}};
  CHECK(is_level_planar_drawing(g, d));
}
