#pragma once
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "dimod/dimer.hpp"
#include "dimod/reps.hpp"

namespace dimod {

struct FanRay {
  IVec nu;                     // primitive generator (h, 1)
  std::vector<int> matchings;  // divisor matchings with this class, ascending
  int divisor_matching = -1;   // least of the above, the canonical divisor
};

struct FanCone {
  std::array<int, 3> rays{};  // ascending ray indices
  Pattern fixed_pattern;      // zero set of the fixed point (empty for predicted fans)
};

// Two-dimensional cone shared by maximal cones.  For interior walls the rays
// opposite the wall satisfy nu3 + nu4 = a nu1 + b nu2.
struct FanWall {
  std::array<int, 2> rays{};
  std::vector<int> cones;     // owning cone indices, ascending
  std::vector<int> opposite;  // third ray of each owning cone
  bool compact = false;
  Int a, b;
};

struct FanModel {
  CharPolygon polygon;
  std::vector<FanRay> rays;  // sorted by nu
  std::vector<FanCone> cones;
  std::vector<FanWall> walls;
  bool multiplicity_anomaly = false;  // some ray carries several divisor matchings
};

// Rays from stable patterns with 2-dimensional orbit, maximal cones from the
// fixed points; every structural invariant (unimodular cones, disjoint
// interiors, count = normalized area) verified before returning.
FanModel fan(const Dimer& d, const IVec& theta);

bool same_fan(const FanModel& f, const FanModel& g);
int ray_by_class(const FanModel& f, const IVec& nu);  // -1 when absent
int ray_of_matching(const FanModel& f, int matching);

Triangulation fan_triangulation(const FanModel& f);

// Replaces the two cones at a compact wall by the flipped diagonal pair.
FanModel flipped_fan(const FanModel& f, int wall);

// Divisor class: one coefficient per ray.  The canonical representative of a
// linear-equivalence class vanishes on the rays of the first maximal cone.
using DivisorClass = IVec;

DivisorClass canonical_class(const FanModel& f, const DivisorClass& raw);
bool classes_equivalent(const FanModel& f, const DivisorClass& x, const DivisorClass& y);

// Tautological classes, canonicalized, base vertex zero.
std::vector<DivisorClass> tautological_classes(const Dimer& d, const FanModel& f);

DivisorClass line_bundle(const FanModel& f, const std::vector<DivisorClass>& cls,
                         const IVec& eta);

// Degree of the class on the invariant curve of a compact wall.
Int curve_degree(const FanModel& f, int wall, const DivisorClass& cls);

// theta-weighted Euler characteristics on the curve; asserts the direct
// degree computation agrees.
Int curve_pairing(const FanModel& f, const std::vector<DivisorClass>& cls,
                  const IVec& theta, int wall);

// Link of a ray whose star is a closed fan: cyclically ordered neighbor rays.
std::optional<std::vector<int>> compact_star_link(const FanModel& f, int ray);

// (chi(L|_D), chi(L^dual tensor omega_D)) on the compact divisor of the ray.
std::pair<Int, Int> surface_chi(const FanModel& f, int ray, const DivisorClass& cls);

}  // namespace dimod
