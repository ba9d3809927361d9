#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpt/level_graph.hpp"

namespace lpt {

// Counter-clockwise cyclic order of incident edge ids around every vertex.
struct RotationSystem {
  std::vector<std::vector<int>> rotation;

  bool operator==(const RotationSystem&) const = default;
};

// Darts: 2e is tail->head along edge e, 2e+1 is head->tail.
inline int dart_of(int e, bool forward) { return 2 * e + (forward ? 0 : 1); }
inline int dart_edge(int d) { return d >> 1; }
inline int dart_twin(int d) { return d ^ 1; }
int dart_source(const LevelGraph& g, int d);
int dart_target(const LevelGraph& g, int d);

struct Face {
  std::vector<int> darts;  // boundary walk; the face lies to the left of every dart
  int apex_level = 0;
  std::vector<int> apex_vertices;
  bool outer = false;
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;
  int outer = -1;  // face left of s->t when that edge exists
  bool euler_ok = false;
};

class NotPlanarError : public InputError {
 public:
  using InputError::InputError;
};

class NotLevelPlanarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checks that every edge appears exactly once at each endpoint; throws InputError otherwise.
void check_rotation_system(const LevelGraph& g, const RotationSystem& r);

// Face tracing without throwing; euler_ok reports V - E + F = 2.
FaceSet trace_faces_unchecked(const LevelGraph& g, const RotationSystem& r);
// Face tracing that throws NotPlanarError when the rotation system is not planar.
FaceSet trace_faces(const LevelGraph& g, const RotationSystem& r);
bool is_planar_rotation(const LevelGraph& g, const RotationSystem& r);

// Level-planarity of a planar rotation system via the face characterization, including demands.
// Throws InputError when g lacks a unique source or unique apex or r is not planar.
bool is_level_planar_embedding(const LevelGraph& g, const RotationSystem& r);
// Same test on precomputed faces, without precondition checks.
bool level_planar_faces(const LevelGraph& g, const FaceSet& faces);

RotationSystem reflect(const RotationSystem& r);

struct StAugmentation {
  LevelGraph graph;
  RotationSystem rotation;
  std::vector<int> added_edges;  // edge ids in graph; original edges keep their ids
};

// Connects every sink except the apex to the apex of a suitable incident face.
// Throws NotLevelPlanarError when some sink has no incident face with a higher apex.
StAugmentation st_augment(const LevelGraph& g, const RotationSystem& r);

// Per level, the left-to-right order of properized vertices (indices into properize(g).graph).
struct LevelDrawing {
  std::vector<std::vector<int>> levels;  // indexed by level; unused levels stay empty

  bool operator==(const LevelDrawing&) const = default;
};

LevelDrawing embedding_to_drawing(const LevelGraph& g, const RotationSystem& r);
// Throws InputError when the drawing is malformed or has crossings.
RotationSystem drawing_to_embedding(const LevelGraph& g, const LevelDrawing& d);
bool is_level_planar_drawing(const LevelGraph& g, const LevelDrawing& d);

// Deterministic key: per vertex id, the neighbor ids in counter-clockwise order starting at the
// smallest. Mirror images get different keys.
std::string canonical_form(const LevelGraph& g, const RotationSystem& r);

// Drops the super sink and its edges from an embedding of add_super_sink(original).
RotationSystem strip_super_sink(const LevelGraph& original, const LevelGraph& extended,
                                const RotationSystem& r);

// Restricts a rotation system to the edges with keep[e] set.
RotationSystem restrict_rotation(const RotationSystem& r, const std::vector<char>& keep);

// True when edges a, b, c occur in this cyclic order going counter-clockwise around a vertex.
bool ccw_ordered(const std::vector<int>& rotation, int a, int b, int c);

}  // namespace lpt
