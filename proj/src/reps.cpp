#include "dimod/reps.hpp"

#include <algorithm>
#include <string>

#include "dimod/errors.hpp"

namespace dimod {
namespace {

std::string subset_str(const std::vector<int>& r) {
  std::string s = "{";
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + "}";
}

void check_pattern(const Dimer& d, const Pattern& z) {
  for (size_t i = 0; i < z.size(); ++i) {
    check(z[i] >= 0 && z[i] < d.quiver.na, ErrorCode::InvalidModel,
          "pattern entry " + std::to_string(z[i]) + " is not an arrow id");
    check(i == 0 || z[i - 1] < z[i], ErrorCode::InvalidModel,
          "pattern must be strictly increasing");
  }
}

void require_admissible(const Dimer& d, const Pattern& z) {
  check_pattern(d, z);
  for (int a = 0; a < d.quiver.na; ++a) {
    bool zp = matching_count(d.quiver.pplus[a], z) > 0;
    bool zm = matching_count(d.quiver.pminus[a], z) > 0;
    if (zp != zm)
      fail(ErrorCode::InadmissiblePattern,
           "pattern kills only one side of the relation at arrow " +
               std::to_string(a));
  }
}

Int theta_of(const IVec& theta, const std::vector<int>& r) {
  Int s = 0;
  for (int v : r) s += theta[size_t(v)];
  return s;
}

// Proper nonempty vertex subsets, by increasing mask.
std::vector<std::vector<int>> proper_subsets(int nv) {
  check(nv <= 16, ErrorCode::InvalidModel,
        "vertex count too large for subset enumeration");
  std::vector<std::vector<int>> out;
  for (unsigned m = 1; m + 1 < (1u << nv); ++m) {
    std::vector<int> r;
    for (int v = 0; v < nv; ++v)
      if (m >> v & 1) r.push_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

Int det3(const IntMat& m) {
  auto a = [&](int i, int j) { return m.at(i, j); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

void check_theta(const Dimer& d, const IVec& theta) {
  check(theta.size() == size_t(d.quiver.nv), ErrorCode::InvalidModel,
        "stability parameter needs one entry per quiver vertex");
  Int s = 0;
  for (const Int& x : theta) s += x;
  check(s == 0, ErrorCode::InvalidModel,
        "stability parameter entries must sum to zero");
}

bool strongly_generic(const Dimer& d, const IVec& theta) {
  check_theta(d, theta);
  for (const auto& r : proper_subsets(d.quiver.nv))
    if (theta_of(theta, r) == 0) return false;
  return true;
}

void require_strongly_generic(const Dimer& d, const IVec& theta) {
  check_theta(d, theta);
  for (const auto& r : proper_subsets(d.quiver.nv))
    check(theta_of(theta, r) != 0, ErrorCode::NonGenericParameter,
          "stability parameter vanishes on vertex subset " + subset_str(r));
}

bool admissible(const Dimer& d, const Pattern& z) {
  check_pattern(d, z);
  for (int a = 0; a < d.quiver.na; ++a) {
    bool zp = matching_count(d.quiver.pplus[a], z) > 0;
    bool zm = matching_count(d.quiver.pminus[a], z) > 0;
    if (zp != zm) return false;
  }
  return true;
}

std::vector<Pattern> admissible_patterns(const Dimer& d) {
  int na = d.quiver.na;
  check(na <= 20, ErrorCode::InvalidModel,
        "arrow count too large for pattern enumeration");
  std::vector<Pattern> out;
  for (unsigned m = 0; m < (1u << na); ++m) {
    Pattern z;
    for (int a = 0; a < na; ++a)
      if (m >> a & 1) z.push_back(a);
    if (admissible(d, z)) out.push_back(std::move(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> closed_supports(const Dimer& d, const Pattern& z) {
  require_admissible(d, z);
  std::vector<std::vector<int>> out;
  for (const auto& r : proper_subsets(d.quiver.nv)) {
    std::vector<char> in(size_t(d.quiver.nv), 0);
    for (int v : r) in[size_t(v)] = 1;
    bool closed = true;
    for (int a = 0; a < d.quiver.na && closed; ++a) {
      if (std::binary_search(z.begin(), z.end(), a)) continue;
      if (in[size_t(d.quiver.src[a])] && !in[size_t(d.quiver.dst[a])])
        closed = false;
    }
    if (closed) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_stable(const Dimer& d, const Pattern& z, const IVec& theta) {
  check_theta(d, theta);
  for (const auto& r : closed_supports(d, z))
    if (theta_of(theta, r) <= 0) return false;
  return true;
}

bool is_semistable(const Dimer& d, const Pattern& z, const IVec& theta) {
  check_theta(d, theta);
  for (const auto& r : closed_supports(d, z))
    if (theta_of(theta, r) < 0) return false;
  return true;
}

std::vector<Pattern> stable_patterns(const Dimer& d, const IVec& theta) {
  require_strongly_generic(d, theta);
  std::vector<Pattern> out;
  for (auto& z : admissible_patterns(d))
    if (is_stable(d, z, theta)) out.push_back(std::move(z));
  return out;
}

std::vector<std::vector<int>> support_census(const Dimer& d, const IVec& theta) {
  require_strongly_generic(d, theta);
  std::vector<std::vector<int>> out;
  for (const auto& z : stable_patterns(d, theta))
    for (auto& r : closed_supports(d, z)) out.push_back(std::move(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& r : out)
    check(theta_of(theta, r) != 0, ErrorCode::NonGenericParameter,
          "stability parameter vanishes on census subset " + subset_str(r));
  return out;
}

int orbit_dim(const Dimer& d, const Pattern& z) {
  require_admissible(d, z);
  const Quiver& q = d.quiver;
  std::vector<int> support;
  for (int a = 0; a < q.na; ++a)
    if (!std::binary_search(z.begin(), z.end(), a)) support.push_back(a);

  IntMat rel = IntMat::from_rows(q.rel, q.na);
  std::vector<IVec> kw = kernel_basis(rel);

  std::vector<IVec> flows;
  for (const IVec& x : kw) {
    IVec row;
    for (int a : support) row.push_back(x[size_t(a)]);
    flows.push_back(std::move(row));
  }
  std::vector<IVec> gauge;
  for (int v = 0; v < q.nv; ++v) {
    IVec row;
    for (int a : support)
      row.push_back(Int(q.dst[a] == v) - Int(q.src[a] == v));
    gauge.push_back(std::move(row));
  }
  int ns = int(support.size());
  int rf = rank_of(IntMat::from_rows(flows, ns));
  int rg = rank_of(IntMat::from_rows(gauge, ns));
  check(rf >= rg, ErrorCode::InvariantViolation,
        "gauge directions escape the relation-preserving flows");
  return rf - rg;
}

std::vector<Pattern> fixed_points(const Dimer& d, const IVec& theta) {
  std::vector<Pattern> out;
  for (auto& z : stable_patterns(d, theta))
    if (orbit_dim(d, z) == 0) out.push_back(std::move(z));
  return out;
}

IVec arrow_vec(const std::vector<int>& arrows, int na) {
  IVec u(size_t(na), Int(0));
  for (int a : arrows) u[size_t(a)] += 1;
  return u;
}

IVec WeightLattice::cycle_class(const IVec& u) const {
  auto y = solve_integer(K.transposed(), u);
  check(y.has_value(), ErrorCode::InvariantViolation,
        "exponent vector lies outside the boundary kernel");
  IVec z = V.vec_mul(*y);
  return {z[size_t(rel_rank)], z[size_t(rel_rank) + 1], z[size_t(rel_rank) + 2]};
}

IVec WeightLattice::cycle_class_height(const IVec& u) const {
  return Tit.mul_vec(cycle_class(u));
}

WeightLattice weight_lattice(const Dimer& d) {
  check(d.non_degenerate, ErrorCode::DegenerateModel,
        "weight lattice needs every edge on some perfect matching");
  const Quiver& q = d.quiver;

  IntMat del(q.nv, q.na);
  for (int a = 0; a < q.na; ++a) {
    del.at(q.dst[a], a) += 1;
    del.at(q.src[a], a) -= 1;
  }
  WeightLattice w;
  std::vector<IVec> kb = kernel_basis(del);
  int k = int(kb.size());
  w.K = IntMat::from_rows(kb, q.na);

  IntMat kt = w.K.transposed();
  std::vector<IVec> xr;
  for (const IVec& r : q.rel) {
    auto x = solve_integer(kt, r);
    check(x.has_value(), ErrorCode::InvariantViolation,
          "relation vector lies outside the boundary kernel");
    xr.push_back(*x);
  }
  SmithResult s = smith_normal_form(IntMat::from_rows(xr, k));
  w.rel_rank = s.rank;
  check(k - s.rank == 3, ErrorCode::RankError,
        "weight lattice has rank " + std::to_string(k - s.rank) +
            ", expected 3");
  w.V = s.V;
  w.Vinv = inverse_unimodular(s.V);

  std::vector<IVec> g;
  for (int j = 0; j < 3; ++j)
    g.push_back(w.K.vec_mul(w.Vinv.row(w.rel_rank + j)));

  int nd = int(d.matchings.size());
  for (int i = 0; i < nd; ++i) {
    IVec nu(3, Int(0));
    for (int e : d.matchings[size_t(i)])
      for (int j = 0; j < 3; ++j) nu[size_t(j)] += g[size_t(j)][size_t(e)];
    w.nu.push_back(nu);
    w.height.push_back({d.matching_class[size_t(i)][0],
                        d.matching_class[size_t(i)][1], Int(1)});
  }

  int i1 = -1, i2 = -1, i3 = -1;
  for (int a = 0; a < nd && i1 < 0; ++a)
    for (int b = a + 1; b < nd && i1 < 0; ++b)
      for (int c = b + 1; c < nd && i1 < 0; ++c)
        if (rank_of(IntMat::from_rows({w.nu[size_t(a)], w.nu[size_t(b)],
                                       w.nu[size_t(c)]},
                                      3)) == 3) {
          i1 = a;
          i2 = b;
          i3 = c;
        }
  check(i1 >= 0, ErrorCode::InvariantViolation,
        "matching degree functionals do not span the weight lattice");

  IntMat base = IntMat::from_rows(
      {w.nu[size_t(i1)], w.nu[size_t(i2)], w.nu[size_t(i3)]}, 3);
  std::vector<IVec> trows;
  for (int r = 0; r < 3; ++r) {
    IVec b = {w.height[size_t(i1)][size_t(r)], w.height[size_t(i2)][size_t(r)],
              w.height[size_t(i3)][size_t(r)]};
    auto x = solve_integer(base, b);
    check(x.has_value(), ErrorCode::InvariantViolation,
          "matching heights are not an integral change of weight basis");
    trows.push_back(*x);
  }
  w.T = IntMat::from_rows(trows, 3);
  Int dt = det3(w.T);
  check(dt == 1 || dt == -1, ErrorCode::InvariantViolation,
        "degree-to-height change of basis is not unimodular");
  for (int i = 0; i < nd; ++i)
    check(w.T.mul_vec(w.nu[size_t(i)]) == w.height[size_t(i)],
          ErrorCode::InvariantViolation,
          "matching degree functional disagrees with its height");
  w.Tit = inverse_unimodular(w.T).transposed();

  for (int v = 0; v < q.nv; ++v) {
    IVec u = arrow_vec(q.small_cycle[size_t(v)], q.na);
    IVec c = w.cycle_class(u);
    for (int i = 0; i < nd; ++i)
      check(ivec_dot(w.nu[size_t(i)], c) == 1, ErrorCode::InvariantViolation,
            "small cycle does not have degree one against matching " +
                std::to_string(i));
  }
  return w;
}

}  // namespace dimod
