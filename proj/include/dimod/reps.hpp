#pragma once
#include <vector>

#include "dimod/dimer.hpp"
#include "dimod/intmat.hpp"

namespace dimod {

// Zero set of an arrow pattern: sorted arrow ids carrying the value 0.
using Pattern = std::vector<int>;

// One integer per quiver vertex, summing to zero.
void check_theta(const Dimer& d, const IVec& theta);

// theta(chi_R) != 0 for every proper nonempty vertex subset R.
bool strongly_generic(const Dimer& d, const IVec& theta);
void require_strongly_generic(const Dimer& d, const IVec& theta);

// p_plus(a) and p_minus(a) meet the zero set together, for every arrow.
bool admissible(const Dimer& d, const Pattern& z);
std::vector<Pattern> admissible_patterns(const Dimer& d);

// Proper nonempty vertex sets closed under the arrows off the zero set; the
// supports of nonzero proper submodules of any representation with this
// pattern.  Throws InadmissiblePattern.
std::vector<std::vector<int>> closed_supports(const Dimer& d, const Pattern& z);

bool is_stable(const Dimer& d, const Pattern& z, const IVec& theta);
bool is_semistable(const Dimer& d, const Pattern& z, const IVec& theta);

std::vector<Pattern> stable_patterns(const Dimer& d, const IVec& theta);

// Closed supports of all theta-stable patterns, deduped.
std::vector<std::vector<int>> support_census(const Dimer& d, const IVec& theta);

// Dimension of the torus orbit of the pattern: scaling flows on the support
// modulo gauge coboundaries.
int orbit_dim(const Dimer& d, const Pattern& z);

// Stable patterns with zero-dimensional orbit.
std::vector<Pattern> fixed_points(const Dimer& d, const IVec& theta);

// ker(boundary: Z^A -> Z^V) / span{rel}, free of rank 3.  nu[i] is the degree
// functional u -> sum_{a in D_i} u_a of matching i in the chosen basis;
// height[i] = (h(D_i), 1) with h the matching class; T carries nu to height.
struct WeightLattice {
  IntMat K;        // rows: basis of the boundary kernel
  IntMat V, Vinv;  // Smith change of basis on kernel coordinates
  int rel_rank = 0;
  std::vector<IVec> nu;
  std::vector<IVec> height;
  IntMat T;    // in GL_3(Z), T * nu[i] = height[i]
  IntMat Tit;  // inverse transpose of T: class coordinates in the height basis

  // rank-3 class of an exponent vector lying in the boundary kernel
  IVec cycle_class(const IVec& u) const;
  IVec cycle_class_height(const IVec& u) const;
};

// Throws RankError when the quotient does not have rank 3 and DegenerateModel
// for models with a dead edge.
WeightLattice weight_lattice(const Dimer& d);

// Exponent vector of an arrow list.
IVec arrow_vec(const std::vector<int>& arrows, int na);

}  // namespace dimod
