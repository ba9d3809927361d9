// Command-line front end for the LP-tree library.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lpt/generate.hpp"
#include "lpt/json_io.hpp"
#include "lpt/lptree.hpp"
#include "lpt/oracle.hpp"
#include "lpt/solvers.hpp"

using namespace lpt;

namespace {

constexpr int kOk = 0, kNegative = 1, kInputError = 2;

struct Options {
  std::string input;
  std::string embedding;  // optional rotation JSON
  std::string output;
  std::string stage = "final";
  std::uint64_t seed = 1;
  int max_n = 100000;
  int guard = kDefaultGuard;
  long limit = -1;
  std::vector<int> sizes;
  int reps = 3;
  bool super_sink = false;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write '" + o.output + "'");
  out << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

LevelGraph load_graph(const Options& o) {
  LevelGraph g = graph_from_json(read_json(o.input));
  return o.super_sink ? add_super_sink(g) : g;
}

void require_valid(const LevelGraph& g) {
  Diagnostics d = validate(g);
  if (d.ok()) return;
  std::string msg = "invalid graph:";
  if (!d.single_source) {
    msg += " sources";
    for (const auto& s : d.sources) msg += " " + s;
    msg += ";";
  }
  if (!d.biconnected) msg += " not biconnected;";
  if (!d.unique_apex) msg += " no unique apex;";
  if (!d.has_st_edge) msg += " missing (s,t);";
  if (!d.simple) msg += " duplicate edges;";
  if (!d.demands_bounded) msg += " demand reaches the apex level;";
  throw InputError(msg);
}

LpTree load_tree(const Options& o, const LevelGraph& g) {
  require_valid(g);
  if (o.embedding.empty()) return build_lp_tree(g);
  return build_lp_tree(g, rotation_from_json(g, read_json(o.embedding)));
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

int cmd_validate(const Options& o) {
  LevelGraph g = load_graph(o);
  Diagnostics d = validate(g);
  Json j;
  j["ok"] = d.ok();
  j["single_source"] = d.single_source;
  j["sources"] = strings(d.sources);
  j["biconnected"] = d.biconnected;
  j["cut_vertices"] = strings(d.cut_vertices);
  j["unique_apex"] = d.unique_apex;
  j["apices"] = strings(d.apices);
  j["has_st_edge"] = d.has_st_edge;
  j["proper"] = d.proper;
  j["long_edges"] = strings(d.long_edges);
  j["simple"] = d.simple;
  j["duplicate_edges"] = strings(d.duplicate_edges);
  j["demands_bounded"] = d.demands_bounded;
  j["demand_violations"] = strings(d.demand_violations);
  emit_json(o, j);
  if (!d.ok()) {
    std::cerr << "invalid graph";
    if (!d.single_source) {
      std::cerr << "; sources:";
      for (const auto& s : d.sources) std::cerr << ' ' << s;
    }
    std::cerr << '\n';
    return kInputError;
  }
  return kOk;
}

int cmd_embed(const Options& o) {
  LevelGraph g = load_graph(o);
  require_valid(g);
  RotationSystem r = reference_embedding(g);
  Json j;
  j["rotation"] = rotation_to_json(g, r);
  j["drawing"] = drawing_to_json(g, embedding_to_drawing(g, r));
  emit_json(o, j);
  return kOk;
}

Json stats_json(const BuildStats& s) {
  return Json{{"spqr_nodes", s.spqr_nodes},       {"spqr_s", s.spqr_s},
              {"spqr_p", s.spqr_p},               {"spqr_q", s.spqr_q},
              {"spqr_r", s.spqr_r},               {"p_splits", s.p_splits},
              {"p_conversions", s.p_conversions}, {"rs_contractions", s.rs_contractions},
              {"rigid_arcs", s.rigid_arcs},       {"flexible_arcs", s.flexible_arcs},
              {"final_nodes", s.final_nodes},     {"final_s", s.final_s},
              {"final_p", s.final_p},             {"final_q", s.final_q},
              {"final_r", s.final_r},             {"skeleton_size", s.skeleton_size}};
}

std::string edge_name(const LevelGraph& g, int e) { return g.id(g.edge(e).tail) + "->" + g.id(g.edge(e).head); }

int cmd_build_tree(const Options& o) {
  LevelGraph g = load_graph(o);
  LpTree t = load_tree(o, g);
  const DecompositionTree& tr = t.tree;
  Json nodes = Json::array();
  for (int x : tr.top_down()) {
    auto [a, b] = tr.poles(x, g);
    Json n{{"id", x},
           {"kind", kind_name(tr.nodes[x].kind)},
           {"parent", tr.nodes[x].parent},
           {"poles", {g.id(a), g.id(b)}},
           {"height", t.height[x]},
           {"space", t.space[x]}};
    Json edges = Json::array();
    for (int e : tr.skeleton(x))
      if (tr.edges[e].real >= 0) edges.push_back(edge_name(g, tr.edges[e].real));
    n["real_edges"] = edges;
    nodes.push_back(n);
  }
  Json arcs = Json::array();
  for (const auto& a : t.arcs)
    arcs.push_back({{"parent", a.parent},
                    {"child", a.child},
                    {"parent_kind", kind_name(a.parent_kind)},
                    {"child_kind", kind_name(a.child_kind)},
                    {"height", a.height},
                    {"space", a.space},
                    {"label", label_name(a.label)}});
  Json pn = Json::array();
  for (size_t i = 0; i < t.p_nodes.size(); ++i) pn.push_back({{"node", t.p_nodes[i]}, {"children", t.p_children[i].size()}});
  Json j;
  j["nodes"] = nodes;
  j["labeled_arcs"] = arcs;
  j["p_nodes"] = pn;
  j["flip_nodes"] = t.flip_nodes;
  j["count"] = count_embeddings(t).str();
  j["stats"] = stats_json(t.stats);
  emit_json(o, j);
  return kOk;
}

Json tree_dump(const DecompositionTree& t, const LevelGraph& g) {
  Json nodes = Json::array();
  for (int x : t.top_down()) {
    Json skel = Json::array();
    for (int e : t.skeleton(x)) {
      const SkeletonEdge& se = t.edges[e];
      Json je{{"id", e}, {"u", g.id(se.u)}, {"v", g.id(se.v)}};
      if (se.real >= 0) je["real"] = edge_name(g, se.real);
      if (se.twin >= 0) {
        je["twin"] = se.twin;
        je["neighbor"] = t.neighbor(e);
      }
      skel.push_back(je);
    }
    nodes.push_back({{"id", x},
                     {"kind", kind_name(t.nodes[x].kind)},
                     {"parent", t.nodes[x].parent},
                     {"label", label_name(t.nodes[x].label)},
                     {"skeleton", skel}});
  }
  return Json{{"root", t.root}, {"nodes", nodes}};
}

int cmd_dump_tree(const Options& o) {
  LevelGraph g = load_graph(o);
  if (o.stage == "spqr") {
    require_valid(g);
    DecompositionTree t = build_spqr(g);
    t.compact();
    emit_json(o, tree_dump(t, g));
    return kOk;
  }
  LpTree t = load_tree(o, g);
  emit_json(o, tree_dump(o.stage == "labeled" ? t.labeled : t.tree, g));
  return kOk;
}

int cmd_enumerate(const Options& o) {
  LevelGraph g = load_graph(o);
  LpTree t = load_tree(o, g);
  Json list = Json::array();
  long n = 0;
  enumerate_embeddings(t, [&](const ChoiceVector& c, const RotationSystem& r) {
    if (o.limit >= 0 && n >= o.limit) return false;
    Json flips = Json::array();
    for (char f : c.flip) flips.push_back(f != 0);
    list.push_back({{"order", c.order}, {"flip", flips}, {"rotation", rotation_to_json(g, r)}});
    ++n;
    return true;
  });
  emit_json(o, Json{{"count", count_embeddings(t).str()}, {"embeddings", list}});
  return kOk;
}

int cmd_count(const Options& o) {
  LevelGraph g = load_graph(o);
  LpTree t = load_tree(o, g);
  emit(o, count_embeddings(t).str() + "\n");
  return kOk;
}

int cmd_oracle(const Options& o) {
  LevelGraph g = load_graph(o);
  EmbeddingSet set = brute_force_embeddings(g, o.guard);
  Json list = Json::array();
  for (const auto& [key, entry] : set.entries)
    list.push_back({{"key", key}, {"rotation", rotation_to_json(g, entry.rotation)}, {"drawing", drawing_to_json(g, entry.drawing)}});
  emit_json(o, Json{{"count", set.count()}, {"embeddings", list}});
  return set.count() > 0 ? kOk : kNegative;
}

int verdict_out(const Options& o, const Verdict& v, const Json& witness) {
  Json j{{"status", v.sat ? "SAT" : "UNSAT"}};
  if (v.sat) {
    j["witness"] = witness;
  } else {
    j["reason"] = v.reason;
  }
  emit_json(o, j);
  return v.sat ? kOk : kNegative;
}

int cmd_solve_partial(const Options& o) {
  PegInstance p = peg_from_json(read_json(o.input));
  require_valid(p.graph);
  Verdict v = solve_partial(p);
  Json w;
  if (v.sat) w = Json{{"rotation", rotation_to_json(p.graph, *v.embedding)}};
  return verdict_out(o, v, w);
}

int cmd_solve_constrained(const Options& o) {
  ClgInstance c = clg_from_json(read_json(o.input));
  require_valid(c.graph);
  Verdict v = solve_constrained(c);
  Json w;
  if (v.sat)
    w = Json{{"rotation", rotation_to_json(c.graph, *v.embedding)}, {"drawing", drawing_to_json(c.graph, *v.drawing)}};
  return verdict_out(o, v, w);
}

int cmd_solve_sefe(const Options& o) {
  SefeInstance s = sefe_from_json(read_json(o.input));
  require_valid(s.shared);
  Verdict v = solve_simultaneous(s);
  Json w;
  if (v.sat)
    w = Json{{"shared", rotation_to_json(s.shared, *v.embedding)},
             {"first", rotation_to_json(sefe_graph(s, 0), *v.augmented[0])},
             {"second", rotation_to_json(sefe_graph(s, 1), *v.augmented[1])}};
  return verdict_out(o, v, w);
}

std::string render_svg(const LevelGraph& g, const LevelDrawing& d) {
  Properization pr = properize(g);
  const double step = 60, margin = 40;
  int min_level = g.min_level(), max_level = g.max_level();
  size_t width = 1;
  std::vector<double> x(pr.graph.vertex_count(), 0), y(pr.graph.vertex_count(), 0);
  for (int l = 0; l < static_cast<int>(d.levels.size()); ++l) {
    width = std::max(width, d.levels[l].size());
    for (size_t i = 0; i < d.levels[l].size(); ++i) {
      x[d.levels[l][i]] = margin + step * static_cast<double>(i);
      y[d.levels[l][i]] = margin + step * (max_level - l);
    }
  }
  double w = 2 * margin + step * static_cast<double>(width - 1);
  double h = 2 * margin + step * (max_level - min_level);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h << "\">\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
    for (size_t i = 0; i < pr.chain[e].size(); ++i) out << (i ? " " : "") << x[pr.chain[e][i]] << ',' << y[pr.chain[e][i]];
    out << "\"/>\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  <circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << x[v] + 9 << "\" y=\"" << y[v] - 9 << "\" font-size=\"12\">" << g.id(v) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

int cmd_render(const Options& o) {
  LevelGraph g = load_graph(o);
  RotationSystem r;
  if (o.embedding.empty()) {
    require_valid(g);
    r = reference_embedding(g);
  } else {
    r = rotation_from_json(g, read_json(o.embedding));
  }
  emit(o, render_svg(g, embedding_to_drawing(g, r)));
  return kOk;
}

int cmd_bench(const Options& o) {
  std::vector<int> sizes = o.sizes;
  if (sizes.empty())
    for (int n = 1000; n <= o.max_n; n *= 2) sizes.push_back(n);
  Json rows = Json::array();
  for (int n : sizes) {
    BenchInstance b = bench_instance(n, o.seed);
    double best = 1e300;
    LpTree t;
    for (int k = 0; k < std::max(1, o.reps); ++k) {
      auto t0 = std::chrono::steady_clock::now();
      t = build_lp_tree(b.graph, b.embedding);
      auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    rows.push_back({{"n", b.graph.vertex_count()},
                    {"m", b.graph.edge_count()},
                    {"seconds", best},
                    {"final_nodes", t.stats.final_nodes},
                    {"p_nodes", t.p_nodes.size()},
                    {"flip_nodes", t.flip_nodes.size()}});
  }
  emit_json(o, Json{{"seed", o.seed}, {"runs", rows}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LP-tree construction and level planarity solvers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-o,--output", o.output, "Write the result here instead of stdout");
  app.add_flag("--super-sink", o.super_sink, "Add the super-sink t and the edge (s,t) to an input graph first");

  auto with_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->required();
    return sub;
  };
  struct Entry {
    CLI::App* app;
    int (*run)(const Options&);
  };
  std::vector<Entry> entries;
  auto* validate_cmd = with_input(app.add_subcommand("validate", "Check input preconditions"), "Graph JSON");
  entries.push_back({validate_cmd, cmd_validate});
  auto* embed_cmd = with_input(app.add_subcommand("embed", "Find a level-planar embedding"), "Graph JSON");
  entries.push_back({embed_cmd, cmd_embed});
  auto* build_cmd = with_input(app.add_subcommand("build-tree", "Build the LP-tree and print it"), "Graph JSON");
  build_cmd->add_option("--embedding", o.embedding, "Reference embedding (rotation JSON)");
  entries.push_back({build_cmd, cmd_build_tree});
  auto* dump_cmd = with_input(app.add_subcommand("dump-tree", "Print a decomposition tree with skeletons"), "Graph JSON");
  dump_cmd->add_option("--stage", o.stage, "spqr, labeled or final")->check(CLI::IsMember({"spqr", "labeled", "final"}));
  dump_cmd->add_option("--embedding", o.embedding, "Reference embedding (rotation JSON)");
  entries.push_back({dump_cmd, cmd_dump_tree});
  auto* enum_cmd = with_input(app.add_subcommand("enumerate", "List every represented embedding"), "Graph JSON");
  enum_cmd->add_option("--limit", o.limit, "Stop after this many embeddings");
  enum_cmd->add_option("--embedding", o.embedding, "Reference embedding (rotation JSON)");
  entries.push_back({enum_cmd, cmd_enumerate});
  auto* count_cmd = with_input(app.add_subcommand("count", "Count level-planar embeddings"), "Graph JSON");
  count_cmd->add_option("--embedding", o.embedding, "Reference embedding (rotation JSON)");
  entries.push_back({count_cmd, cmd_count});
  auto* oracle_cmd = with_input(app.add_subcommand("oracle", "Brute-force embedding set"), "Graph JSON");
  oracle_cmd->add_option("--guard", o.guard, "Largest vertex count the oracle accepts");
  entries.push_back({oracle_cmd, cmd_oracle});
  entries.push_back({with_input(app.add_subcommand("solve-partial", "Extend a partial embedding"), "Instance JSON"),
                     cmd_solve_partial});
  entries.push_back({with_input(app.add_subcommand("solve-constrained", "Respect per-level vertex orders"), "Instance JSON"),
                     cmd_solve_constrained});
  entries.push_back({with_input(app.add_subcommand("solve-sefe", "Simultaneous level planarity"), "Instance JSON"),
                     cmd_solve_sefe});
  auto* render_cmd = with_input(app.add_subcommand("render", "Draw an embedding as SVG"), "Graph JSON");
  render_cmd->add_option("--embedding", o.embedding, "Embedding to draw (rotation JSON)");
  entries.push_back({render_cmd, cmd_render});
  auto* bench_cmd = app.add_subcommand("bench", "Time LP-tree construction on generated graphs");
  bench_cmd->add_option("--seed", o.seed, "Generator seed");
  bench_cmd->add_option("--max-n", o.max_n, "Largest size when --sizes is absent (doubling from 1000)");
  bench_cmd->add_option("--sizes", o.sizes, "Explicit vertex counts")->delimiter(',');
  bench_cmd->add_option("--reps", o.reps, "Repetitions per size; the fastest counts");
  entries.push_back({bench_cmd, cmd_bench});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    for (const auto& en : entries)
      if (en.app->parsed()) return en.run(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotLevelPlanarError& e) {
    std::cerr << "not level planar: " << e.what() << '\n';
    return kNegative;
  } catch (const SearchBudgetError& e) {
    std::cerr << "gave up: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
