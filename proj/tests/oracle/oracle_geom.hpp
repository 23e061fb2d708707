#pragma once
#include <array>
#include <vector>

#include "dimod/numeric.hpp"

// Independent reference implementations used only by tests.  They avoid the
// library's own geometric predicates: polygon overlap is decided by exact
// rational clipping instead of separating axes, and lift certificates are
// re-checked through rational plane interpolation.
namespace oracle {

using dimod::Int;
using dimod::IVec;
using dimod::Rat;
using dimod::V2;
using QP = std::array<Rat, 2>;

// twice the area of the intersection of two lattice triangles
Rat triangle_intersection_area2(const V2& a0, const V2& a1, const V2& a2,
                                const V2& b0, const V2& b1, const V2& b2);

// number of ways to tile the convex hull of `points` (given with all its
// lattice points and normalized area) by unimodular lattice triangles
long long count_unimodular_coverings(const std::vector<V2>& points, long long area);

bool lift_is_strictly_convex(const std::vector<V2>& points,
                             const std::vector<std::array<int, 3>>& tris,
                             const IVec& lift);

int rational_rank(const std::vector<IVec>& rows, int cols);

// cells of a central arrangement of the given normal vectors in the plane
long long central_arrangement_regions_2d(const std::vector<IVec>& normals);

}  // namespace oracle
