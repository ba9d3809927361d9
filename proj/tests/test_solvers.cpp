#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "lpt/generate.hpp"
#include "lpt/oracle.hpp"
#include "lpt/solvers.hpp"

using namespace lpt;

namespace {

bool truth_table(const TwoSatInstance& t) {
  for (std::uint32_t mask = 0; mask < (1u << t.variables); ++mask) {
    auto val = [&](Literal l) { return (((mask >> l.var) & 1u) != 0) == l.positive; };
    bool ok = true;
    for (auto [a, b] : t.clauses) ok = ok && (val(a) || val(b));
    if (ok) return true;
  }
  return false;
}

bool satisfies(const TwoSatInstance& t, const std::vector<char>& x) {
  auto val = [&](Literal l) { return (x[l.var] != 0) == l.positive; };
  for (auto [a, b] : t.clauses)
    if (!val(a) && !val(b)) return false;
  return true;
}

LevelGraph random_lp_graph(std::mt19937_64& rng, int round) {
  RandomGraphOptions opt;
  for (;;) {
    opt.vertices = 4 + round % 5;
    opt.levels = 3 + round % 3;
    opt.extra_edges = 0.2 + 0.1 * (round % 4);
    opt.demand_chance = round % 4 == 0 ? 0.3 : 0.0;
    LevelGraph g = random_instance_retry(opt, rng);
    if (brute_force_embeddings(g).count() > 0) return g;
    ++round;
  }
}

// Choice vector in absolute terms: each flip node's parity and each P-node's order with the
// inherited parity undone. Node constraints are stated in this frame.
std::vector<std::vector<int>> absolute_choice(const LpTree& t, const ChoiceVector& c) {
  const auto& tree = t.tree;
  std::vector<char> flip(tree.nodes.size(), 0), parity(tree.nodes.size(), 0);
  for (size_t i = 0; i < t.flip_nodes.size(); ++i) flip[t.flip_nodes[i]] = c.flip[i];
  for (int x : tree.top_down()) {
    int p = tree.nodes[x].parent;
    parity[x] = (p >= 0 ? parity[p] : 0) ^ flip[x];
  }
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < t.p_nodes.size(); ++i) {
    std::vector<int> order = c.order[i];
    if (parity[t.p_nodes[i]]) std::reverse(order.begin(), order.end());
    out.push_back(order);
  }
  for (int x : t.flip_nodes) out.push_back({parity[x]});
  return out;
}

// The satisfying choices form a product over nodes: their count equals the product of the
// per-coordinate projections.
bool is_product(const std::vector<std::vector<std::vector<int>>>& sat) {
  if (sat.empty()) return true;
  std::size_t product = 1;
  for (size_t k = 0; k < sat[0].size(); ++k) {
    std::set<std::vector<int>> values;
    for (const auto& a : sat) values.insert(a[k]);
    product *= values.size();
  }
  return product == sat.size();
}

}  // namespace

TEST_CASE("2-SAT on small formulas") {
  TwoSatInstance one;
  int x = one.add_variable();
  one.add_unit(Literal{x, true});
  auto r = twosat_solve(one);
  REQUIRE(r.sat);
  CHECK(r.assignment[0] == 1);

  TwoSatInstance four;
  int a = four.add_variable(), b = four.add_variable();
  four.add_clause({a, true}, {b, true});
  four.add_clause({a, false}, {b, true});
  four.add_clause({a, true}, {b, false});
  four.add_clause({a, false}, {b, false});
  auto u = twosat_solve(four);
  CHECK_FALSE(u.sat);
  CHECK(u.conflict_var >= 0);

  CHECK(twosat_solve(TwoSatInstance{}).sat);
}

TEST_CASE("2-SAT agrees with truth tables") {
  std::mt19937_64 rng(77);
  int sat = 0, unsat = 0;
  for (int round = 0; round < 600; ++round) {
    TwoSatInstance t;
    t.variables = 1 + round % 20;
    int m = std::uniform_int_distribution<int>(0, 3 * t.variables)(rng);
    std::uniform_int_distribution<int> var(0, t.variables - 1);
    std::bernoulli_distribution sign(0.5);
    for (int i = 0; i < m; ++i) t.add_clause({var(rng), sign(rng)}, {var(rng), sign(rng)});
    auto r = twosat_solve(t);
    CHECK(r.sat == truth_table(t));
    if (r.sat) {
      CHECK(satisfies(t, r.assignment));
      ++sat;
    } else {
      ++unsat;
    }
  }
  CHECK(sat > 50);
  CHECK(unsat > 50);
}

TEST_CASE("order translation on the fixtures") {
  auto d1 = fixtures::d1();
  auto c = translate_order_constraint(d1, d1.vertex_index("a"), d1.vertex_index("b"));
  CHECK(c.vertex == d1.vertex_index("s"));
  CHECK(c.e == fixtures::edge(d1, "s", "a"));
  CHECK(c.f == fixtures::edge(d1, "s", "b"));
  CHECK(c.g == fixtures::edge(d1, "s", "t"));

  auto p1 = fixtures::p1();
  auto cp = translate_order_constraint(p1, p1.vertex_index("a"), p1.vertex_index("b"));
  CHECK(cp.vertex == p1.vertex_index("s"));
  CHECK(cp.e == fixtures::edge(p1, "s", "a"));
  CHECK(cp.f == fixtures::edge(p1, "s", "b"));

  CHECK_THROWS_AS(translate_order_constraint(d1, 1, 1), InputError);
  CHECK_THROWS_AS(translate_order_constraint(d1, d1.vertex_index("s"), d1.vertex_index("a")), InputError);
}

TEST_CASE("order translation is sound on every represented embedding") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    LevelGraph g = random_lp_graph(rng, round);
    OrderTranslator tr(g);
    for (const auto& [key, entry] : brute_force_embeddings(g).entries) {
      std::vector<int> pos(g.vertex_count(), -1);
      for (const auto& lvl : entry.drawing.levels)
        for (int i = 0; i < static_cast<int>(lvl.size()); ++i)
          if (lvl[i] < g.vertex_count()) pos[lvl[i]] = i;
      for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (u == v || g.level(u) != g.level(v)) continue;
          auto c = tr.translate(u, v);
          auto o = c.ccw();
          CHECK((pos[u] < pos[v]) == ccw_ordered(entry.rotation.rotation[c.vertex], o[0], o[1], o[2]));
          ++checked;
        }
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("constrained level planarity on D1") {
  auto g = fixtures::d1();
  int a = g.vertex_index("a"), b = g.vertex_index("b");
  auto v = solve_constrained(ClgInstance{g, {{a, b}}});
  REQUIRE(v.sat);
  REQUIRE(v.drawing);
  const auto& lvl = v.drawing->levels[2];
  auto pa = std::find(lvl.begin(), lvl.end(), a), pb = std::find(lvl.begin(), lvl.end(), b);
  CHECK(pa < pb);

  auto w = solve_constrained(ClgInstance{g, {{b, a}}});
  REQUIRE(w.sat);
  CHECK(w.embedding != v.embedding);

  CHECK_FALSE(solve_constrained(ClgInstance{g, {{a, b}, {b, a}}}).sat);
  CHECK(solve_constrained(ClgInstance{g, {}}).sat);
  CHECK_THROWS_AS(solve_constrained(ClgInstance{g, {{a, a}}}), InputError);
}

TEST_CASE("partial embeddings on the fixtures") {
  for (auto g : {fixtures::d1(), fixtures::p1(), fixtures::r2()}) {
    std::vector<int> all;
    for (int e = 0; e < g.edge_count(); ++e) all.push_back(e);
    for (const auto& [key, entry] : brute_force_embeddings(g).entries) {
      auto v = solve_partial(PegInstance{g, all, entry.rotation});
      REQUIRE(v.sat);
      CHECK(canonical_form(g, *v.embedding) == key);
    }
    RotationSystem none;
    none.rotation.resize(g.vertex_count());
    CHECK(solve_partial(PegInstance{g, {}, none}).sat);
  }

  // The inner K4 of R2 turned so that z faces the low side.
  auto g = fixtures::r2();
  auto ref = reference_embedding(g);
  std::vector<int> k4;
  for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"p", "y"}, {"p", "z"}, {"q", "y"}, {"q", "z"}, {"y", "z"}})
    k4.push_back(fixtures::edge(g, x, y));
  auto turned = reflect_subgraph(g, ref, k4, g.vertex_index("p"), g.vertex_index("q"));
  CHECK(is_planar_rotation(g, turned));
  CHECK_FALSE(is_level_planar_embedding(g, turned));
  // With the K4 alone a global mirror would do; the surrounding edges pin the frame.
  std::vector<int> all;
  for (int e = 0; e < g.edge_count(); ++e) all.push_back(e);
  PegInstance low{g, all, turned};
  CHECK_FALSE(solve_partial(low).sat);
  CHECK_FALSE(brute_force_verdict(low).sat);
  std::vector<char> keep(g.edge_count(), 0);
  for (int e : k4) keep[e] = 1;
  PegInstance high{g, k4, restrict_rotation(turned, keep)};
  CHECK(solve_partial(high).sat);
}

TEST_CASE("partial embeddings agree with the oracle") {
  std::mt19937_64 rng(11);
  int sat = 0, unsat = 0;
  for (int round = 0; round < 150; ++round) {
    LevelGraph g = random_lp_graph(rng, round);
    LpTree t = build_lp_tree(g);
    PegInstance p = random_peg(t, rng, 0.3 + 0.1 * (round % 6));
    Verdict want = brute_force_verdict(p);
    Verdict got = solve_partial(t, p);
    CHECK(got.sat == want.sat);
    if (got.sat) {
      CHECK(extends_partial(p, *got.embedding));
      CHECK(is_level_planar_embedding(g, *got.embedding));
      ++sat;
    } else {
      ++unsat;
    }
  }
  CHECK(sat > 20);
  CHECK(unsat > 10);
}

TEST_CASE("constrained instances agree with the oracle") {
  std::mt19937_64 rng(12);
  int sat = 0, unsat = 0;
  for (int round = 0; round < 150; ++round) {
    LevelGraph g = random_lp_graph(rng, round);
    ClgInstance c = random_clg(g, rng, 4);
    Verdict want = brute_force_verdict(c);
    Verdict got = solve_constrained(c);
    CHECK(got.sat == want.sat);
    if (got.sat) {
      CHECK(respects_orders(c, *got.drawing));
      ++sat;
    } else {
      ++unsat;
    }
  }
  CHECK(sat > 20);
  CHECK(unsat > 5);
}

TEST_CASE("simultaneous instances agree with the oracle") {
  std::mt19937_64 rng(13);
  int sat = 0, unsat = 0;
  for (int round = 0; round < 120; ++round) {
    LevelGraph g = random_lp_graph(rng, round);
    SefeInstance s = random_sefe(g, rng, 3);
    Verdict want = brute_force_verdict(s);
    Verdict got = solve_simultaneous(s);
    CHECK(got.sat == want.sat);
    if (got.sat) {
      CHECK(verify_simultaneous(s, *got.augmented[0], *got.augmented[1]));
      ++sat;
    } else {
      ++unsat;
    }
  }
  CHECK(sat > 20);
  CHECK(unsat > 5);

  // No exclusive edges: any represented embedding serves both sides.
  auto d1 = fixtures::d1();
  auto v = solve_simultaneous(SefeInstance{d1, {}});
  REQUIRE(v.sat);
  CHECK(*v.augmented[0] == *v.augmented[1]);
}

TEST_CASE("non-level-planar graphs are unsatisfiable") {
  LevelGraph h;
  h.add_vertex("s", 1);
  h.add_vertex("a", 2, 4);
  h.add_vertex("b", 2);
  h.add_vertex("c", 3);
  h.add_vertex("d", 3);
  h.add_vertex("t", 5);
  for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
           {"s", "a"}, {"s", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}, {"c", "t"}, {"d", "t"}, {"s", "t"}})
    h.add_edge(u, v);
  REQUIRE(brute_force_embeddings(h).count() == 0);
  RotationSystem none;
  none.rotation.resize(h.vertex_count());
  CHECK_FALSE(solve_partial(PegInstance{h, {}, none}).sat);
  CHECK_FALSE(solve_constrained(ClgInstance{h, {}}).sat);
  CHECK_FALSE(solve_simultaneous(SefeInstance{h, {}}).sat);
}

TEST_CASE("edge-order and vertex-order front ends agree") {
  // A drawing fixes both an edge order (its embedding) and per-level vertex orders.
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int round = 0; round < 40; ++round) {
    LevelGraph g = random_lp_graph(rng, round);
    std::vector<int> all;
    for (int e = 0; e < g.edge_count(); ++e) all.push_back(e);
    for (const auto& [key, entry] : brute_force_embeddings(g).entries) {
      ClgInstance c{g, {}};
      for (const auto& lvl : entry.drawing.levels) {
        std::vector<int> real;
        for (int x : lvl)
          if (x < g.vertex_count()) real.push_back(x);
        for (size_t i = 1; i < real.size(); ++i) c.pairs.emplace_back(real[i - 1], real[i]);
      }
      Verdict by_edges = solve_partial(PegInstance{g, all, entry.rotation});
      Verdict by_vertices = solve_constrained(c);
      REQUIRE(by_edges.sat);
      REQUIRE(by_vertices.sat);
      CHECK(embedding_to_drawing(g, *by_edges.embedding) == entry.drawing);
      for (size_t l = 0; l < entry.drawing.levels.size(); ++l) {
        std::vector<int> want, got;
        for (int x : entry.drawing.levels[l])
          if (x < g.vertex_count()) want.push_back(x);
        for (int x : by_vertices.drawing->levels[l])
          if (x < g.vertex_count()) got.push_back(x);
        CHECK(want == got);
      }
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("satisfying per-node choices compose") {
  std::mt19937_64 rng(17);
  int nontrivial = 0;
  for (int round = 0; round < 120; ++round) {
    LevelGraph g = random_lp_graph(rng, round);
    LpTree t = build_lp_tree(g);
    PegInstance p = random_peg(t, rng, 0.2 + 0.1 * (round % 5));
    ClgInstance c = random_clg(g, rng, 3);
    std::vector<std::vector<std::vector<int>>> peg_sat, clg_sat;
    std::size_t total = 0;
    enumerate_embeddings(t, [&](const ChoiceVector& choice, const RotationSystem& r) {
      ++total;
      if (extends_partial(p, r)) peg_sat.push_back(absolute_choice(t, choice));
      if (respects_orders(c, embedding_to_drawing(g, r))) clg_sat.push_back(absolute_choice(t, choice));
      return true;
    });
    CHECK(is_product(peg_sat));
    CHECK(is_product(clg_sat));
    CHECK(solve_partial(t, p).sat == !peg_sat.empty());
    CHECK(solve_constrained(c).sat == !clg_sat.empty());
    nontrivial += (peg_sat.size() > 1 && peg_sat.size() < total) + (clg_sat.size() > 1 && clg_sat.size() < total);
  }
  CHECK(nontrivial > 20);
}
