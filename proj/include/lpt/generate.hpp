#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "lpt/lptree.hpp"
#include "lpt/problems.hpp"

namespace lpt {

struct RandomGraphOptions {
  int vertices = 6;        // before the super-sink is added
  int levels = 4;
  double extra_edges = 0.3;  // probability of each additional upward edge
  double demand_chance = 0.0;  // probability that a vertex demands more than its level
};

// Single-source level graph with a super-sink, or nothing when the attempt is not
// biconnected or not simple.
std::optional<LevelGraph> random_instance(const RandomGraphOptions& opt, std::mt19937_64& rng);
// Retries random_instance until it succeeds.
LevelGraph random_instance_retry(const RandomGraphOptions& opt, std::mt19937_64& rng);

// Every single-source level graph with at most `max_vertices` vertices on levels
// 1..max_levels (source alone on level 1), passed through add_super_sink and kept
// when biconnected. Isomorphic copies that only permute vertices within a level
// are skipped. Vertex ids are "s", "a", "b", ... and "t".
void for_each_corpus_graph(int max_vertices, int max_levels, const std::function<void(const LevelGraph&)>& visit);

struct BenchInstance {
  LevelGraph graph;
  RotationSystem embedding;  // level planar, taken from the generating drawing
  LevelDrawing drawing;
};

// Layered biconnected single-source graph with about n vertices. Consecutive levels are
// joined by non-crossing staircases; a fraction of extra sink vertices is hung between
// neighbors. A super-sink t with (s,t) closes it up.
BenchInstance bench_instance(int n, std::uint64_t seed, double sink_fraction = 0.05);

// Uniformly random choice vector of an LP-tree.
ChoiceVector random_choice(const LpTree& t, std::mt19937_64& rng);

// Random edge subset of t.graph with a rotation taken from a represented embedding, its mirror
// image or a random shuffle, so that both verdicts occur.
PegInstance random_peg(const LpTree& t, std::mt19937_64& rng, double keep = 0.5);
// Up to `max_pairs` same-level pairs of distinct vertices.
ClgInstance random_clg(const LevelGraph& g, std::mt19937_64& rng, int max_pairs = 4);
// Shared graph plus up to `max_exclusive` new upward edges split between the two sides.
SefeInstance random_sefe(const LevelGraph& shared, std::mt19937_64& rng, int max_exclusive = 3);

}  // namespace lpt
