#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpt/lptree.hpp"
#include "lpt/problems.hpp"

namespace lpt {

struct Literal {
  int var = -1;
  bool positive = true;

  Literal operator!() const { return {var, !positive}; }
  bool operator==(const Literal&) const = default;
};

// Clauses of at most two literals; a unit clause is stored as (a, a).
struct TwoSatInstance {
  int variables = 0;
  std::vector<std::pair<Literal, Literal>> clauses;

  int add_variable() { return variables++; }
  void add_clause(Literal a, Literal b) { clauses.emplace_back(a, b); }
  void add_unit(Literal a) { clauses.emplace_back(a, a); }
  void add_implication(Literal a, Literal b) { add_clause(!a, b); }
  void add_equal(Literal a, Literal b) {
    add_implication(a, b);
    add_implication(b, a);
  }
  void add_different(Literal a, Literal b) { add_equal(a, !b); }
};

struct TwoSatResult {
  bool sat = false;
  std::vector<char> assignment;  // per variable when sat
  int conflict_var = -1;         // x and not-x share a strongly connected component
};

TwoSatResult twosat_solve(const TwoSatInstance& t);

// Edges e, f leave w toward u and v along disjoint upward paths; g enters w, or is (s,t)
// when w = s. u lies left of v exactly when g, f, e occur counter-clockwise around w.
struct ConstraintTriple {
  int vertex = -1;
  int e = -1, f = -1, g = -1;

  std::array<int, 3> ccw() const { return {g, f, e}; }
};

// Answers many translations over one depth-first tree from the source.
class OrderTranslator {
 public:
  // Throws InputError when g has no unique source or no edge (s,t).
  explicit OrderTranslator(const LevelGraph& g);
  // Throws InputError unless u != v lie on one level.
  ConstraintTriple translate(int u, int v) const;

 private:
  const LevelGraph& g_;
  int source_ = -1;
  int st_edge_ = -1;
  std::vector<int> depth_;
  std::vector<int> parent_edge_;
  std::vector<std::vector<int>> up_;  // binary lifting table

  int ancestor(int v, int d) const;  // ancestor of v at depth d
};

ConstraintTriple translate_order_constraint(const LevelGraph& g, int u, int v);

// Graph-level preconditions (validity) raise InputError; a graph that is not level planar
// yields an unsatisfiable verdict.
Verdict solve_partial(const PegInstance& p);
// Same, reusing an LP-tree of p.graph.
Verdict solve_partial(const LpTree& t, const PegInstance& p);
Verdict solve_constrained(const ClgInstance& c);
// Throws SearchBudgetError after `budget` candidate shared embeddings.
Verdict solve_simultaneous(const SefeInstance& s, std::int64_t budget = std::int64_t(1) << 20);

}  // namespace lpt
