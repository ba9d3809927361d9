#include <doctest.h>

#include "fixtures.hpp"
#include "lpt/json_io.hpp"

using namespace lpt;

TEST_CASE("validate reports structural flags") {
  SUBCASE("D1 passes every flag") {
    auto d = validate(fixtures::d1());
    CHECK(d.single_source);
    CHECK(d.biconnected);
    CHECK(d.unique_apex);
    CHECK(d.has_st_edge);
    CHECK(d.simple);
    CHECK(d.demands_bounded);
    CHECK(d.ok());
  }
  SUBCASE("a single vertex is not biconnected") {
    LevelGraph g;
    g.add_vertex("s", 1);
    auto d = validate(g);
    CHECK(d.single_source);
    CHECK_FALSE(d.biconnected);
  }
  SUBCASE("two isolated vertices are two sources") {
    LevelGraph g;
    g.add_vertex("u", 1);
    g.add_vertex("v", 1);
    auto d = validate(g);
    CHECK_FALSE(d.single_source);
    CHECK(d.sources == std::vector<std::string>{"u", "v"});
  }
  SUBCASE("path has a cut vertex") {
    auto g = fixtures::make({{"s", 1}, {"a", 2}, {"b", 3}}, {{"s", "a"}, {"a", "b"}});
    auto d = validate(g);
    CHECK_FALSE(d.biconnected);
    CHECK(d.cut_vertices == std::vector<std::string>{"a"});
  }
  SUBCASE("long edges make the graph non-proper") {
    auto d = validate(fixtures::r2());
    CHECK_FALSE(d.proper);
    CHECK(d.ok());
  }
  SUBCASE("duplicate edges are flagged") {
    auto g = fixtures::make({{"s", 1}, {"t", 2}}, {{"s", "t"}, {"s", "t"}});
    CHECK_FALSE(validate(g).simple);
  }
  SUBCASE("demand reaching the apex level is flagged") {
    LevelGraph g;
    g.add_vertex("s", 1);
    g.add_vertex("a", 2, 3);
    g.add_vertex("t", 3);
    g.add_edge("s", "a");
    g.add_edge("a", "t");
    g.add_edge("s", "t");
    auto d = validate(g);
    CHECK_FALSE(d.demands_bounded);
    CHECK(d.demand_violations == std::vector<std::string>{"a"});
  }
}

TEST_CASE("edges must go upward and demands must reach the level") {
  LevelGraph g;
  g.add_vertex("a", 2);
  g.add_vertex("b", 2);
  CHECK_THROWS_AS(g.add_edge("a", "b"), InputError);
  CHECK_THROWS_AS(g.add_vertex("c", 3, 2), InputError);
  CHECK_THROWS_AS(g.add_vertex("a", 1), InputError);
}

TEST_CASE("add_super_sink") {
  SUBCASE("path gets a new apex above it") {
    auto g = fixtures::make({{"s", 1}, {"a", 2}}, {{"s", "a"}});
    auto h = add_super_sink(g);
    int t = h.vertex_index("t");
    CHECK(h.level(t) == 3);
    CHECK(h.demand(t) == 3);
    CHECK(h.find_edge(h.vertex_index("a"), t));
    CHECK(h.find_edge(h.vertex_index("s"), t));
    CHECK(h.edge_count() == 3);
    auto d = validate(h);
    CHECK(d.unique_apex);
    CHECK(d.has_st_edge);
  }
  SUBCASE("an existing apex gets a primed apex above it") {
    auto h = add_super_sink(fixtures::d1());
    int t2 = h.vertex_index("t'");
    CHECK(h.level(t2) == 4);
    CHECK(h.find_edge(h.vertex_index("t"), t2));
    CHECK(h.find_edge(h.vertex_index("s"), t2));
  }
  SUBCASE("demands lift the apex") {
    LevelGraph g;
    g.add_vertex("s", 1);
    g.add_vertex("v", 2, 4);
    g.add_edge("s", "v");
    auto h = add_super_sink(g);
    CHECK(h.level(h.vertex_index("t")) == 5);
  }
}

TEST_CASE("properize") {
  SUBCASE("a two-level edge gets one dummy") {
    auto g = fixtures::make({{"s", 1}, {"t", 3}}, {{"s", "t"}});
    auto p = properize(g);
    CHECK(p.graph.vertex_count() == 3);
    CHECK(p.chain[0].size() == 3);
    CHECK(p.graph.level(p.chain[0][1]) == 2);
    CHECK(p.dummy_edge[2] == 0);
  }
  SUBCASE("proper graphs are unchanged") {
    auto g = fixtures::d1();
    g = fixtures::make({{"s", 1}, {"a", 2}, {"t", 3}}, {{"s", "a"}, {"a", "t"}});
    auto p = properize(g);
    CHECK(p.graph.vertex_count() == g.vertex_count());
    CHECK(p.graph.edge_count() == g.edge_count());
  }
  SUBCASE("R2's (s,t) gets four dummies") {
    auto g = fixtures::r2();
    auto p = properize(g);
    CHECK(p.chain[fixtures::edge(g, "s", "t")].size() == 6);
  }
}

TEST_CASE("graph JSON round trip") {
  auto g = fixtures::p1();
  auto h = graph_from_json(graph_to_json(g));
  CHECK(graph_to_json(h) == graph_to_json(g));
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[{"id":"a"}],"edges":[]})")), InputError);
  auto withDemand = graph_from_json(Json::parse(R"({"vertices":[{"id":"a","level":1},{"id":"b","level":2,"demand":3}],"edges":[["a","b"]]})"));
  CHECK(withDemand.demand(0) == 1);
  CHECK(withDemand.demand(1) == 3);
}
