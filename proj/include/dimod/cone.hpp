#pragma once
#include <vector>

#include "dimod/intmat.hpp"

namespace dimod {

// V-representation of {x : h.x >= 0 for all h}.  Rays are primitive canonical
// representatives modulo the lineality space, lex-sorted; lineality is the
// saturated kernel lattice of the inequality normals, in row HNF.
struct Cone {
  int dim = 0;
  std::vector<IVec> rays;
  std::vector<IVec> lineality;
};

Cone cone_from_inequalities(const std::vector<IVec>& ineqs, int dim);

struct RationalCone {
  int dim = 0;
  std::vector<IVec> generators;  // extreme rays plus +-(lineality basis)
  std::vector<IVec> halfspaces;  // cone = {x : h.x >= 0}; equalities appear as +- pairs
};

// Computes the halfspace description of cone(generators) and re-derives the
// minimal generator list from it.
RationalCone cone_dual(const std::vector<IVec>& generators, int dim);

// Primitive normals of the irredundant facets of {x : w.x >= 0}, deduped, sorted.
std::vector<IVec> irredundant_facets(const std::vector<IVec>& ineqs, int dim);

// Deterministic integral point with s.x > 0 for all strict and e.x = 0 for all
// equalities; throws EmptyInterior when no such point exists.
IVec interior_point(const std::vector<IVec>& strict, const std::vector<IVec>& equalities, int dim);

// rank of the linear span of the cone
int cone_span_rank(const Cone& c);

bool in_halfspaces(const IVec& x, const std::vector<IVec>& halfspaces);

}  // namespace dimod
