// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero when any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "brute_helpers.hpp"
#include "fixtures.hpp"
#include "lpt/generate.hpp"
#include "lpt/lptree.hpp"
#include "lpt/oracle.hpp"
#include "lpt/solvers.hpp"

using namespace lpt;

namespace {

// Corpus bounds before the super-sink is added: t brings it to 7 vertices on 5 levels.
constexpr int kCorpusVertices = 6;
constexpr int kCorpusLevels = 4;
constexpr int kRandomExactness = 500;
constexpr int kRandomMaxVertices = 9;  // plus t: at most 10
// Random graphs stay at density <= 0.3 and <= 5 levels; the oracle's search explodes beyond.
constexpr double kExactnessSeconds = 600.0;
constexpr int kPegInstances = 300;
constexpr int kClgInstances = 300;
constexpr int kSefeInstances = 200;
constexpr int kSolverMaxVertices = 8;  // plus t: at most 9
constexpr int kMaxPairs = 4;
constexpr int kMaxExclusive = 3;
constexpr int kAugmentSpotCheck = 2000;  // embeddings of one augmented graph tested at most
constexpr int kScalingSizes[] = {25000, 50000, 100000};
constexpr double kScalingRatio = 2.5;
constexpr double kScalingSeconds = 300.0;
constexpr int kScalingReps = 3;
constexpr std::uint64_t kSeed = 20240611;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;
};

void report(const Result& r) { std::printf("%s criterion %d (%s): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str()); }

struct CorpusGraph {
  LevelGraph graph;
  EmbeddingSet oracle;
};

std::vector<CorpusGraph> load_corpus() {
  std::vector<CorpusGraph> out;
  for_each_corpus_graph(kCorpusVertices, kCorpusLevels, [&](const LevelGraph& g) { out.push_back({g, brute_force_embeddings(g)}); });
  return out;
}

std::set<std::string> keys_of(const EmbeddingSet& s) {
  std::set<std::string> k;
  for (const auto& [key, e] : s.entries) k.insert(key);
  return k;
}

// LP-tree key set equals the oracle's; an empty oracle demands a rejection.
bool tree_matches_oracle(const LevelGraph& g, const EmbeddingSet& oracle, std::string& why) {
  if (oracle.count() == 0) {
    try {
      build_lp_tree(g);
    } catch (const NotLevelPlanarError&) {
      return true;
    }
    why = "LP-tree built for a graph without level-planar embeddings";
    return false;
  }
  LpTree t = build_lp_tree(g);
  std::set<std::string> keys;
  std::size_t visits = 0;
  enumerate_embeddings(t, [&](const ChoiceVector&, const RotationSystem& r) {
    keys.insert(canonical_form(g, r));
    ++visits;
    return true;
  });
  if (keys != keys_of(oracle)) {
    why = "key sets differ (" + std::to_string(keys.size()) + " vs " + std::to_string(oracle.count()) + ")";
    return false;
  }
  if (visits != keys.size() || count_embeddings(t) != visits) {
    why = "count, enumeration and key set sizes disagree";
    return false;
  }
  return true;
}

Result exactness(const std::vector<CorpusGraph>& corpus) {
  Result r{1, "exactness"};
  auto t0 = Clock::now();
  int bad = 0, lp = 0;
  std::string first;
  for (const auto& c : corpus) {
    std::string why;
    if (!tree_matches_oracle(c.graph, c.oracle, why)) {
      if (!bad++) first = why;
    }
    lp += c.oracle.count() > 0;
  }
  std::mt19937_64 rng(kSeed);
  RandomGraphOptions opt;
  for (int i = 0; i < kRandomExactness; ++i) {
    opt.vertices = 3 + i % (kRandomMaxVertices - 2);
    opt.levels = 3 + i % 3;
    opt.extra_edges = 0.15 + 0.05 * (i % 4);
    opt.demand_chance = i % 3 == 0 ? 0.3 : 0.0;
    LevelGraph g = random_instance_retry(opt, rng);
    EmbeddingSet oracle = brute_force_embeddings(g);
    std::string why;
    if (!tree_matches_oracle(g, oracle, why)) {
      if (!bad++) first = why;
    }
    lp += oracle.count() > 0;
  }
  double secs = seconds_since(t0);
  r.pass = bad == 0 && secs <= kExactnessSeconds;
  std::ostringstream d;
  d << corpus.size() << " corpus + " << kRandomExactness << " random graphs (" << lp << " level planar), " << bad
    << " mismatches, " << secs << " s (limit " << kExactnessSeconds << " s)";
  if (bad) d << "; first: " << first;
  r.detail = d.str();
  return r;
}

const ArcRecord* arc_into(const LpTree& t, const LevelGraph& g, std::vector<std::string> verts) {
  std::sort(verts.begin(), verts.end());
  for (const auto& a : t.arcs) {
    std::vector<std::string> have;
    for (int v : t.labeled.skeleton_vertices(a.child)) have.push_back(g.id(v));
    std::sort(have.begin(), have.end());
    if (have == verts) return &a;
  }
  return nullptr;
}

Result fixture_counts() {
  Result r{2, "fixture counts"};
  std::ostringstream d;
  struct Want {
    const char* name;
    LevelGraph g;
    int count;
  };
  for (auto& w : std::vector<Want>{{"D1", fixtures::d1(), 2}, {"P1", fixtures::p1(), 4}, {"R2", fixtures::r2(), 2}}) {
    LpTree t = build_lp_tree(w.g);
    std::size_t visits = 0;
    enumerate_embeddings(t, [&](const ChoiceVector&, const RotationSystem&) {
      ++visits;
      return true;
    });
    std::size_t oracle = brute_force_embeddings(w.g).count();
    bool ok = count_embeddings(t) == w.count && visits == static_cast<std::size_t>(w.count) &&
              oracle == static_cast<std::size_t>(w.count);
    r.pass = r.pass && ok;
    d << w.name << " count/enumerated/oracle " << count_embeddings(t) << "/" << visits << "/" << oracle << "; ";
    if (std::string(w.name) == "D1") {
      r.pass = r.pass && t.stats.p_splits == 0;
      d << "D1 P-splits " << t.stats.p_splits << "; ";
    }
    if (std::string(w.name) == "P1") {
      r.pass = r.pass && t.stats.p_splits == 1;
      d << "P1 P-splits " << t.stats.p_splits << "; ";
    }
    if (std::string(w.name) == "R2") {
      const ArcRecord* inner = arc_into(t, w.g, {"p", "q", "y", "z"});
      bool rigid = inner && inner->label == ArcLabel::Rigid;
      r.pass = r.pass && rigid;
      d << "R2 inner K4 arc " << (inner ? label_name(inner->label) : "missing");
    }
  }
  r.detail = d.str();
  return r;
}

Result characterization(const std::vector<CorpusGraph>& corpus) {
  Result r{3, "characterization"};
  long rotations = 0, level_planar = 0, bad = 0, missing = 0;
  for (const auto& c : corpus) {
    std::set<std::string> seen;
    try {
      brute::for_each_spqr_embedding(c.graph, [&](const RotationSystem& rot) {
        ++rotations;
        std::string key = canonical_form(c.graph, rot);
        seen.insert(key);
        bool lp = is_level_planar_embedding(c.graph, rot);
        level_planar += lp;
        if (lp != c.oracle.contains(key)) ++bad;
      });
    } catch (const NotLevelPlanarError&) {
      // Not planar: the oracle must be empty.
    }
    for (const auto& [key, e] : c.oracle.entries) missing += !seen.count(key);
  }
  r.pass = bad == 0 && missing == 0;
  std::ostringstream d;
  d << rotations << " planar rotation systems over " << corpus.size() << " graphs, " << level_planar
    << " level planar; " << bad << " disagreements, " << missing << " oracle embeddings not planar";
  r.detail = d.str();
  return r;
}

Result st_augmentation(const std::vector<CorpusGraph>& corpus) {
  Result r{4, "st-augmentation"};
  long embeddings = 0, augmented_checked = 0, bad = 0, capped = 0;
  std::string first;
  auto fail = [&](const std::string& why) {
    if (!bad++) first = why;
  };
  for (const auto& c : corpus) {
    const LevelGraph& g = c.graph;
    for (const auto& [key, e] : c.oracle.entries) {
      ++embeddings;
      StAugmentation aug = st_augment(g, e.rotation);
      const LevelGraph& h = aug.graph;
      if (h.sinks().size() != 1) fail("augmented graph has several sinks");
      if (!is_planar_rotation(h, aug.rotation)) fail("augmented rotation is not planar");
      std::vector<char> keep(h.edge_count(), 0);
      std::fill(keep.begin(), keep.begin() + g.edge_count(), 1);
      RotationSystem back = restrict_rotation(aug.rotation, keep);
      back.rotation.resize(g.vertex_count());
      std::vector<char> all(g.edge_count(), 1);
      if (!same_restriction(back, e.rotation, all)) fail("augmentation changed the embedding of G");
      if (!is_level_planar_embedding(h, aug.rotation)) fail("augmented embedding is not level planar");
      int tested = 0;
      try {
        brute::for_each_spqr_embedding(h, [&](const RotationSystem& rot) {
          if (tested >= kAugmentSpotCheck) return;
          ++tested;
          ++augmented_checked;
          if (!is_level_planar_embedding(h, rot)) fail("planar embedding of the st-graph is not level planar");
        });
      } catch (const InputError& ex) {
        fail(std::string("augmented graph rejected: ") + ex.what());
      }
      capped += tested >= kAugmentSpotCheck;
    }
  }
  r.pass = bad == 0;
  std::ostringstream d;
  d << embeddings << " oracle embeddings augmented, " << augmented_checked << " planar embeddings of augmented graphs tested ("
    << capped << " graphs capped at " << kAugmentSpotCheck << "), " << bad << " violations";
  if (bad) d << "; first: " << first;
  r.detail = d.str();
  return r;
}

LevelGraph solver_graph(std::mt19937_64& rng, int i, bool level_planar) {
  RandomGraphOptions opt;
  for (;;) {
    opt.vertices = 3 + i % (kSolverMaxVertices - 2);
    opt.levels = 3 + i % 3;
    opt.extra_edges = 0.15 + 0.05 * (i % 4);
    opt.demand_chance = i % 4 == 0 ? 0.25 : 0.0;
    LevelGraph g = random_instance_retry(opt, rng);
    if (!level_planar || brute_force_embeddings(g).count() > 0) return g;
    ++i;
  }
}

Result solver_agreement() {
  Result r{5, "solver agreement"};
  std::mt19937_64 rng(kSeed + 5);
  int stats[3][3] = {};  // [problem][sat, unsat, disagreement or bad witness]
  int degenerate_bad = 0;
  std::string first;
  auto note = [&](int problem, bool agree, bool sat) {
    if (!agree) {
      ++stats[problem][2];
      if (first.empty()) first = problem == 0 ? "partial" : problem == 1 ? "constrained" : "simultaneous";
    } else {
      ++stats[problem][sat ? 0 : 1];
    }
  };

  for (int i = 0; i < kPegInstances; ++i) {
    LevelGraph g = solver_graph(rng, i, true);
    LpTree t = build_lp_tree(g);
    PegInstance p;
    if (i % 10 == 0) {  // H = G pins one embedding
      RotationSystem e = realize(t, random_choice(t, rng));
      for (int k = 0; k < g.edge_count(); ++k) p.subgraph_edges.push_back(k);
      p = PegInstance{g, p.subgraph_edges, e};
      Verdict v = solve_partial(p);
      if (!v.sat || canonical_form(g, *v.embedding) != canonical_form(g, e)) ++degenerate_bad;
    } else if (i % 10 == 1) {  // H empty
      RotationSystem none;
      none.rotation.resize(g.vertex_count());
      p = PegInstance{g, {}, none};
      if (!solve_partial(p).sat) ++degenerate_bad;
    } else {
      p = random_peg(t, rng, 0.25 + 0.1 * (i % 6));
    }
    Verdict want = brute_force_verdict(p);
    Verdict got = solve_partial(p);
    bool ok = want.sat == got.sat;
    if (ok && got.sat) ok = extends_partial(p, *got.embedding) && is_level_planar_embedding(g, *got.embedding);
    note(0, ok, got.sat);
  }

  for (int i = 0; i < kClgInstances; ++i) {
    LevelGraph g = solver_graph(rng, i, i % 5 != 0);
    ClgInstance c = random_clg(g, rng, kMaxPairs);
    if (i % 10 == 1) {
      c.pairs.clear();
      if (brute_force_embeddings(g).count() > 0 && !solve_constrained(c).sat) ++degenerate_bad;
    }
    Verdict want = brute_force_verdict(c);
    Verdict got = solve_constrained(c);
    bool ok = want.sat == got.sat;
    if (ok && got.sat) ok = respects_orders(c, *got.drawing) && is_level_planar_drawing(g, *got.drawing);
    note(1, ok, got.sat);
  }

  for (int i = 0; i < kSefeInstances; ++i) {
    LevelGraph g = solver_graph(rng, i, i % 5 != 0);
    SefeInstance s = random_sefe(g, rng, kMaxExclusive);
    if (i % 10 == 1) {
      s.exclusive[0].clear();
      s.exclusive[1].clear();
      if (brute_force_embeddings(g).count() > 0 && !solve_simultaneous(s).sat) ++degenerate_bad;
    }
    Verdict want = brute_force_verdict(s);
    Verdict got = solve_simultaneous(s);
    bool ok = want.sat == got.sat;
    if (ok && got.sat) ok = verify_simultaneous(s, *got.augmented[0], *got.augmented[1]);
    note(2, ok, got.sat);
  }

  r.pass = stats[0][2] == 0 && stats[1][2] == 0 && stats[2][2] == 0 && degenerate_bad == 0;
  std::ostringstream d;
  const char* names[3] = {"PEG", "CLG", "SEFE"};
  for (int k = 0; k < 3; ++k)
    d << names[k] << " " << stats[k][0] << " sat/" << stats[k][1] << " unsat/" << stats[k][2] << " bad; ";
  d << degenerate_bad << " degenerate failures";
  if (!first.empty()) d << "; first bad: " << first;
  r.detail = d.str();
  return r;
}

Result invariants(const std::vector<CorpusGraph>& corpus) {
  Result r{6, "invariant suite"};
  long i_shape = 0, rigid_p = 0, space_bad = 0, flip_bad = 0, arcs_checked = 0, trees = 0;
  for (const auto& c : corpus) {
    if (c.oracle.count() == 0) continue;
    const LevelGraph& g = c.graph;
    LpTree t = build_lp_tree(g);
    ++trees;
    // P-children are I-shaped, in the labeled and in the final tree.
    for (const DecompositionTree* tr : {&t.labeled, &t.tree}) {
      std::vector<int> h = compute_heights(*tr, g);
      for (int x : tr->top_down()) {
        if (tr->nodes[x].kind != NodeKind::P) continue;
        int upper = g.level(tr->poles(x, g).second);
        for (auto [child, ve] : tr->children(x)) i_shape += h[child] >= upper;
      }
    }
    for (const auto& a : t.arcs)
      rigid_p += a.label == ArcLabel::Rigid && (a.parent_kind == NodeKind::P || a.child_kind == NodeKind::P);

    std::vector<int> ref_labeled = compute_spaces(t.labeled, g, t.reference);
    std::vector<int> ref_final = compute_spaces(t.tree, g, t.reference);
    enumerate_embeddings(t, [&](const ChoiceVector&, const RotationSystem& rot) {
      space_bad += compute_spaces(t.labeled, g, rot) != ref_labeled;
      space_bad += compute_spaces(t.tree, g, rot) != ref_final;
      for (const auto& a : t.arcs) {
        int pe = t.labeled.nodes[a.child].parent_edge;
        const SkeletonEdge& se = t.labeled.edges[pe];
        std::vector<int> edges = expansion_edges(t.labeled, se.twin);
        RotationSystem turned = reflect_subgraph(g, rot, edges, se.u, se.v);
        bool lp = is_level_planar_embedding(g, turned);
        flip_bad += lp != (a.label == ArcLabel::Flexible);
        ++arcs_checked;
      }
      return true;
    });
  }
  r.pass = i_shape == 0 && rigid_p == 0 && space_bad == 0 && flip_bad == 0;
  std::ostringstream d;
  d << trees << " LP-trees, " << arcs_checked << " arc reflections; violations: I-shape " << i_shape
    << ", rigid P-incident arcs " << rigid_p << ", space changes " << space_bad << ", flip dichotomy " << flip_bad;
  r.detail = d.str();
  return r;
}

Result scaling() {
  Result r{7, "scaling"};
  auto t0 = Clock::now();
  std::vector<double> secs;
  std::ostringstream d;
  for (int n : kScalingSizes) {
    BenchInstance b = bench_instance(n, kSeed);
    double best = 1e300;
    for (int k = 0; k < kScalingReps; ++k) {
      auto s0 = Clock::now();
      LpTree t = build_lp_tree(b.graph, b.embedding);
      best = std::min(best, seconds_since(s0));
    }
    secs.push_back(best);
    d << "n=" << b.graph.vertex_count() << " " << best << " s; ";
  }
  double worst = 0;
  for (size_t i = 1; i < secs.size(); ++i) worst = std::max(worst, secs[i] / secs[i - 1]);
  double total = seconds_since(t0);
  r.pass = worst <= kScalingRatio && total <= kScalingSeconds;
  d << "worst ratio per doubling " << worst << " (limit " << kScalingRatio << "), total " << total << " s";
  r.detail = d.str();
  return r;
}

}  // namespace

int main() {
  std::vector<CorpusGraph> corpus = load_corpus();
  std::vector<Result> results;
  auto run = [&](Result r) {
    report(r);
    std::fflush(stdout);
    results.push_back(std::move(r));
  };
  run(exactness(corpus));
  run(fixture_counts());
  run(characterization(corpus));
  run(st_augmentation(corpus));
  run(solver_agreement());
  run(invariants(corpus));
  run(scaling());
  bool all = std::all_of(results.begin(), results.end(), [](const Result& r) { return r.pass; });
  std::printf("%s: %zu criteria\n", all ? "ALL PASS" : "SOME FAILED", results.size());
  return all ? 0 : 1;
}
