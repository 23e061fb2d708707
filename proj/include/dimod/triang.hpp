#pragma once
#include <array>
#include <vector>

#include "dimod/cone.hpp"

namespace dimod {

struct Polygon2 {
  std::vector<V2> hull;    // ccw, starting at the lexicographically least vertex
  std::vector<V2> points;  // every lattice point of the hull, lex-sorted
  Int area2 = 0;           // normalized area = twice the Euclidean area
};

// Throws DegeneratePolygon when the points span less than a 2-dimensional hull.
Polygon2 polygon_from_points(const std::vector<V2>& pts);

struct Triangulation {
  // vertex-index triples into Polygon2::points; each triple sorted, list sorted
  std::vector<std::array<int, 3>> tris;
  // strictly convex lifting certificate, one integer height per lattice point
  IVec lift;
};

bool unimodular_triangle(const V2& a, const V2& b, const V2& c);
bool interiors_disjoint(const V2& a0, const V2& a1, const V2& a2,
                        const V2& b0, const V2& b1, const V2& b2);

// All triangulations of the polygon into unimodular lattice triangles that
// admit a strictly convex lifting, in lexicographic order, certificates
// attached and re-verified against the global lower-hull condition.
std::vector<Triangulation> regular_unimodular_triangulations(const Polygon2& poly);

// Exact check that `lift` certifies the triangulation: every lattice point not
// in a triangle lies strictly above that triangle's lifted plane.
void verify_lift_certificate(const Polygon2& poly,
                             const std::vector<std::array<int, 3>>& tris,
                             const IVec& lift);

}  // namespace dimod
