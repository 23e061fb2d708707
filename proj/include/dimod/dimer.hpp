#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dimod/numeric.hpp"
#include "dimod/triang.hpp"

namespace dimod {

enum class Color { Black, White };

struct DimerNode {
  int id = 0;
  Color color = Color::Black;
  bool operator==(const DimerNode&) const = default;
};

struct DimerEdge {
  int id = 0;
  int black = 0;
  int white = 0;
  V2 winding{};  // displacement of the white end relative to the black end
  bool operator==(const DimerEdge&) const = default;
};

// Bicolored graph on the two-torus, encoded combinatorially: a ccw cyclic edge
// order at every node plus a Z^2 winding per edge.
struct DimerModel {
  std::string name;
  std::vector<DimerNode> nodes;
  std::vector<DimerEdge> edges;
  std::vector<std::vector<int>> rotation;  // indexed by node id
  std::optional<int> v0;                   // base face override
  bool operator==(const DimerModel&) const = default;
};

// Darts: 2e+1 is edge e oriented black->white, 2e the reverse orientation.
struct Face {
  int id = 0;
  std::vector<int> darts;  // ccw walk; the face lies on the left of every dart
};

// Arrows are indexed by edge id and run between the two faces adjacent to the
// edge (the face seeing the edge white-to-black first is the source).  pplus
// and pminus are the return paths dst(a) -> src(a) around the white and black
// endpoint of the edge.
struct Quiver {
  int nv = 0, na = 0;
  std::vector<int> src, dst;
  std::vector<std::vector<int>> pplus, pminus;
  std::vector<IVec> rel;                      // exponent vector of pplus minus pminus
  std::vector<std::vector<int>> small_cycle;  // per vertex; meets every matching once
};

struct Dimer {
  DimerModel model;
  std::vector<Face> faces;
  std::vector<int> dart_face;  // dart -> face id
  int v0 = 0;
  Quiver quiver;
  std::vector<std::vector<int>> matchings;  // each sorted by edge id; list lex-sorted
  int ref_matching = 0;                     // index of the reference (lex-least) matching
  std::vector<V2> matching_class;           // homology class relative to the reference
  bool non_degenerate = true;               // every edge lies in some matching
};

// Validates the model and derives its combinatorial structure.  Throws
// NotBipartite / UnivalentNode / InvalidModel / Disconnected /
// NotTorusCellular / NoPerfectMatching on bad input.
Dimer build_dimer(const DimerModel& m);

struct CharPolygon {
  Polygon2 poly;
  std::vector<int> multiplicity;  // matchings per lattice point, parallel to poly.points
};

// Throws DegenerateModel when some edge lies in no matching.
CharPolygon characteristic_polygon(const Dimer& d);

// Number of entries of `arrows` lying in the sorted edge set `match`.
int matching_count(const std::vector<int>& arrows, const std::vector<int>& match);

}  // namespace dimod
