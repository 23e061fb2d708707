#pragma once
#include <array>
#include <vector>

#include "dimod/chambers.hpp"

namespace dimod {

struct CrossingRecord {
  WallDescriptor wall;
  IVec theta_from;  // interior parameter of the source chamber
  IVec theta_to;    // strongly generic parameter directly across the facet
  FanModel fan_to;  // predicted far-side fan
  std::vector<DivisorClass> cls_to;  // predicted tautological classes
  std::vector<Int> degrees;  // class degree on the degenerate curve, per vertex (types 1, 3)
  bool verified = false;
};

// Predicts the far-side moduli data by the update rule of the wall type:
// flip the fan across a degenerate curve, twist by the swept divisor, or twist
// the r2 block by the exchanged divisor.  Throws DegreeViolation when a
// tautological degree leaves the admissible set of the rule.
CrossingRecord cross_wall(const Dimer& d, const Chamber& c, const WallDescriptor& w);

// Recomputes the far side from scratch at theta_to, records agreement with
// the prediction in r.verified, and returns the recomputed chamber.
Chamber verify_crossing(const Dimer& d, CrossingRecord& r);

struct ChamberEdge {
  int from = 0, to = 0;
  int type = -1;
  IVec hyperplane;  // sign-canonical facet normal
};

struct ChamberGraph {
  std::vector<Chamber> nodes;
  std::vector<ChamberEdge> edges;
  bool truncated = false;
};

// Breadth-first closure of verified crossings from the chamber of theta.
// Crossings that fail verification abort with InvariantViolation.  Chambers
// beyond max_chambers are not expanded and the graph is flagged truncated.
ChamberGraph explore(const Dimer& d, const IVec& theta, int max_chambers = 64);

struct ReachabilityReport {
  int chambers = 0;
  int edges = 0;
  std::array<int, 4> wall_types{};  // indexed by wall type; slot 2 stays empty
  int triangulations = 0;           // regular unimodular triangulations of the polygon
  int realized = 0;                 // distinct ones appearing among the chamber fans
  bool all_realized = false;
  std::vector<std::vector<std::array<int, 3>>> missing;   // triangle lists never realized
  std::vector<std::vector<DivisorClass>> nef_generators;  // per chamber: bundles of its cone rays
};

// Requires a complete graph; throws BudgetExceeded on a truncated one.
ReachabilityReport reachability_report(const Dimer& d, const ChamberGraph& g);

struct PathClassCount {
  int from = 0, to = 0;
  std::vector<long long> paths;       // arrow paths of each exact length
  std::vector<long long> classes;     // distinct relation classes among them
  std::vector<long long> cumulative;  // distinct classes up to each length
  bool rewrite_confluent = true;      // single relation rewrites connect every class in budget
  bool weights_separate = true;       // distinct classes carry distinct torus weights
};

struct PathCensus {
  int max_len = 0;
  std::vector<PathClassCount> pairs;  // ordered vertex pairs, source-major
};

// Groups arrow paths of length at most max_len by exponent vector modulo the
// relation span; torus weights compare modulo its saturation.
PathCensus path_census(const Dimer& d, int max_len);

}  // namespace dimod
