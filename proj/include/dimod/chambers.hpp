#pragma once
#include <vector>

#include "dimod/cone.hpp"
#include "dimod/moduli.hpp"
#include "dimod/reps.hpp"

namespace dimod {

// Parameters live in the sum-zero hyperplane; reduced coordinates drop the
// base vertex, so a functional sum_v c_v theta(v) turns into the dot product
// with reduce_functional(c).
IVec reduce_parameter(const Dimer& d, const IVec& theta);
IVec lift_parameter(const Dimer& d, const IVec& reduced);
IVec reduce_functional(const Dimer& d, const IVec& coeff);
// reduce_functional of the indicator vector of a vertex subset
IVec subset_normal(const Dimer& d, const std::vector<int>& subset);

struct Chamber {
  IVec seed;      // parameter the chamber was computed from
  IVec interior;  // canonical strongly generic interior parameter
  std::vector<std::vector<int>> census;
  // primitive inward normals of the irredundant facets, sorted; this list is
  // the canonical key of the chamber
  std::vector<IVec> facet_normals;
  Cone cone;  // V-representation of the closure
  std::vector<Pattern> stable;
  FanModel fan;
  std::vector<DivisorClass> cls;  // tautological classes at `interior`
};

// Throws NonGenericParameter off the chamber interiors.  Verifies that the
// census and the stable patterns are constant across three independently
// sampled interior points before trusting them.
Chamber chamber_of(const Dimer& d, const IVec& theta);

struct WallDescriptor {
  IVec normal;              // inward facet normal, reduced coordinates
  std::vector<int> r1, r2;  // destabilizing support on the far side, complement
  IVec theta0;              // parameter in the facet's relative interior
  int type = -1;            // 0, 1 or 3
  bool rigid_sub = false;   // r1 side simply connected: destabilizing submodule rigid
  bool rigid_quot = false;  // r2 side simply connected: quotient rigid
  bool r1_connected = false, r2_connected = false;
  int boundary_components = 0;     // components of the dividing curve on the torus
  std::vector<Pattern> strict_ss;  // interior-stable patterns degenerating at theta0
  int z_dim = 0;                   // top orbit dimension among strict_ss
  DivisorClass z_class;            // rays whose divisor degenerates (types 0 and III)
  int contracted_ray = -1;         // type III: ray of the divisor swept by the fibers
  std::vector<int> zero_walls;     // compact fan walls with curve degree zero at theta0
};

// Classifies the facet with the given inward normal.  Throws TopologyMismatch
// when the dividing curve contradicts the geometric type and InvariantViolation
// when a compact divisor would contract to a point.
WallDescriptor classify_wall(const Dimer& d, const Chamber& c, const IVec& normal);
std::vector<WallDescriptor> facets(const Dimer& d, const Chamber& c);

// Recomputes the chamber cone from sheaf data alone: positivity of the
// theta-weighted Euler characteristics on every compact curve and divisor of
// the resolution.  Returns the facet normals; throws GeometryMismatch when
// they differ from the census description.
std::vector<IVec> chamber_from_geometry(const Dimer& d, const Chamber& c);

// Torus topology of a set of faces: connectivity of the closed union, its
// Euler characteristic, and the component count of its dividing curve.
bool region_connected(const Dimer& d, const std::vector<int>& faces);
int region_euler(const Dimer& d, const std::vector<int>& faces);
int region_boundary_components(const Dimer& d, const std::vector<int>& faces);

}  // namespace dimod
