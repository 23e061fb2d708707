#include "dimod/cone.hpp"

#include <algorithm>

namespace dimod {

namespace {

// Incremental double description with exact arithmetic.  Invariants after each
// insertion: `lin` is the saturated kernel lattice of the processed normals,
// `rays` are canonical primitive representatives of exactly the extreme rays
// modulo lineality.  Extremeness and adjacency use the face-span identity
// span(minimal face of x) = ker(tight normals at x), so the tests are rank
// conditions and stay exact under implied equalities.
struct DDState {
  int dim;
  std::vector<IVec> processed;
  std::vector<IVec> rays;
  std::vector<IVec> lin;
  Lattice linlat;
  IntMat quotV, quotVinv;  // coordinate change with lineality lattice = Z^k x 0
  int lin_rank = 0;

  explicit DDState(int d) : dim(d) {
    for (int j = 0; j < d; ++j) {
      IVec e(d);
      e[j] = 1;
      lin.push_back(e);
    }
    refresh_lin_data();
  }

  int rank_processed() const { return dim - lin_rank; }

  void refresh_lin_data() {
    lin_rank = int(lin.size());
    linlat = Lattice::from_rows(lin, dim);
    if (lin_rank == 0) return;
    SmithResult s = smith_normal_form(IntMat::from_rows(lin, dim));
    for (const Int& d0 : s.diag)
      check(d0 == 1, ErrorCode::InvariantViolation, "dd: lineality basis not saturated");
    quotV = s.V;
    quotVinv = inverse_unimodular(s.V);
  }

  // canonical representative of the ray class of r modulo lineality and
  // positive scaling; zero result means r lies in the lineality space
  IVec canon_ray(const IVec& r) const {
    if (lin_rank == 0) return primitive(r);
    IVec y = quotV.vec_mul(r);  // row vector times V; class = last dim-k entries
    IVec tail(y.begin() + lin_rank, y.end());
    tail = primitive(tail);
    if (ivec_is_zero(tail)) return IVec(dim);
    IVec full(dim);
    for (int j = lin_rank; j < dim; ++j) full[j] = tail[size_t(j - lin_rank)];
    return quotVinv.vec_mul(full);
  }

  std::vector<int> tight_set(const IVec& r) const {
    std::vector<int> t;
    for (size_t i = 0; i < processed.size(); ++i)
      if (ivec_dot(processed[i], r) == 0) t.push_back(int(i));
    return t;
  }

  int tight_rank(const std::vector<int>& idx) const {
    if (idx.empty()) return 0;
    std::vector<IVec> rows;
    for (int i : idx) rows.push_back(processed[size_t(i)]);
    return rank_of(IntMat::from_rows(rows, dim));
  }

  void dedupe_rays() {
    std::sort(rays.begin(), rays.end(), ivec_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  }

  void prune_nonextreme() {
    std::vector<IVec> kept;
    for (const IVec& r : rays)
      if (tight_rank(tight_set(r)) == rank_processed() - 1) kept.push_back(r);
    rays = kept;
  }

  void insert(const IVec& h0) {
    IVec h = primitive(h0);
    if (ivec_is_zero(h)) return;

    int split = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (ivec_dot(h, lin[i]) != 0) {
        split = int(i);
        break;
      }

    if (split >= 0) {
      IVec l0 = lin[size_t(split)];
      if (ivec_dot(h, l0) < 0) l0 = ivec_neg(l0);
      Int hl0 = ivec_dot(h, l0);
      std::vector<IVec> newlin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (int(i) == split) continue;
        IVec l = ivec_scaled(lin[i], hl0);
        ivec_axpy(l, -ivec_dot(h, lin[i]), l0);
        newlin.push_back(primitive(l));
      }
      std::vector<IVec> adjusted;
      for (const IVec& r : rays) {
        IVec rr = ivec_scaled(r, hl0);
        ivec_axpy(rr, -ivec_dot(h, r), l0);
        adjusted.push_back(rr);
      }
      adjusted.push_back(l0);
      processed.push_back(h);
      lin = newlin;
      refresh_lin_data();
      rays.clear();
      for (const IVec& r : adjusted) {
        IVec c = canon_ray(r);
        if (!ivec_is_zero(c)) rays.push_back(c);
      }
      dedupe_rays();
      prune_nonextreme();
      return;
    }

    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = ivec_dot(h, rays[i]);
      if (val[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      processed.push_back(h);
      // lineality unchanged (h vanishes on it); extremeness can only be
      // refined, and tight sets grew, so re-prune for safety
      prune_nonextreme();
      return;
    }

    std::vector<IVec> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    int target = rank_processed() - 2;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        std::vector<int> ti = tight_set(rays[i]);
        std::vector<int> tj = tight_set(rays[j]);
        std::vector<int> common;
        std::set_intersection(ti.begin(), ti.end(), tj.begin(), tj.end(),
                              std::back_inserter(common));
        if (tight_rank(common) != target) continue;
        IVec comb = ivec_scaled(rays[j], val[i]);
        ivec_axpy(comb, -val[j], rays[i]);
        IVec c = canon_ray(comb);
        if (!ivec_is_zero(c)) next.push_back(c);
      }
    }
    rays = next;
    processed.push_back(h);
    dedupe_rays();
    prune_nonextreme();
  }
};

}  // namespace

Cone cone_from_inequalities(const std::vector<IVec>& ineqs, int dim) {
  DDState st(dim);
  for (const IVec& h : ineqs) {
    check(int(h.size()) == dim, ErrorCode::InvariantViolation, "cone: ragged inequality");
    st.insert(h);
  }
  Cone c;
  c.dim = dim;
  c.rays = st.rays;
  std::sort(c.rays.begin(), c.rays.end(), ivec_less);
  c.lineality = st.linlat.rows;
  for (const IVec& r : c.rays)
    for (const IVec& h : st.processed)
      check(ivec_dot(h, r) >= 0, ErrorCode::InvariantViolation, "cone: ray outside cone");
  return c;
}

int cone_span_rank(const Cone& c) {
  std::vector<IVec> rows = c.rays;
  rows.insert(rows.end(), c.lineality.begin(), c.lineality.end());
  if (rows.empty()) return 0;
  return rank_of(IntMat::from_rows(rows, c.dim));
}

RationalCone cone_dual(const std::vector<IVec>& generators, int dim) {
  for (const IVec& g : generators)
    check(int(g.size()) == dim, ErrorCode::InvariantViolation, "cone_dual: ragged generator");
  Cone dual = cone_from_inequalities(generators, dim);
  RationalCone rc;
  rc.dim = dim;
  for (const IVec& r : dual.rays) rc.halfspaces.push_back(r);
  for (const IVec& l : dual.lineality) {
    rc.halfspaces.push_back(l);
    rc.halfspaces.push_back(ivec_neg(l));
  }
  std::sort(rc.halfspaces.begin(), rc.halfspaces.end(), ivec_less);
  Cone primal = cone_from_inequalities(rc.halfspaces, dim);
  for (const IVec& r : primal.rays) rc.generators.push_back(r);
  for (const IVec& l : primal.lineality) {
    rc.generators.push_back(l);
    rc.generators.push_back(ivec_neg(l));
  }
  std::sort(rc.generators.begin(), rc.generators.end(), ivec_less);
  for (const IVec& g : generators)
    check(in_halfspaces(g, rc.halfspaces), ErrorCode::InvariantViolation,
          "cone_dual: generator escapes halfspace description");
  return rc;
}

bool in_halfspaces(const IVec& x, const std::vector<IVec>& halfspaces) {
  for (const IVec& h : halfspaces)
    if (ivec_dot(h, x) < 0) return false;
  return true;
}

std::vector<IVec> irredundant_facets(const std::vector<IVec>& ineqs, int dim) {
  Cone c = cone_from_inequalities(ineqs, dim);
  int full = cone_span_rank(c);
  std::vector<IVec> out;
  for (const IVec& w0 : ineqs) {
    IVec w = primitive(w0);
    if (ivec_is_zero(w)) continue;
    std::vector<IVec> tight = c.lineality;
    for (const IVec& r : c.rays)
      if (ivec_dot(w, r) == 0) tight.push_back(r);
    int tr = tight.empty() ? 0 : rank_of(IntMat::from_rows(tight, dim));
    if (tr == full - 1) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), ivec_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IVec interior_point(const std::vector<IVec>& strict, const std::vector<IVec>& equalities, int dim) {
  std::vector<IVec> K;
  if (equalities.empty()) {
    for (int j = 0; j < dim; ++j) {
      IVec e(dim);
      e[j] = 1;
      K.push_back(e);
    }
  } else {
    K = kernel_basis(IntMat::from_rows(equalities, dim));
  }
  for (IVec& k : K) {
    for (const Int& x : k) {
      if (x > 0) break;
      if (x < 0) {
        k = ivec_neg(k);
        break;
      }
    }
  }
  if (K.empty()) {
    if (strict.empty()) return IVec(dim);
    fail(ErrorCode::EmptyInterior, "no interior point: equalities fix the origin");
  }
  int m = int(K.size());
  std::vector<IVec> proj;
  for (const IVec& s : strict) {
    IVec sp(m);
    for (int j = 0; j < m; ++j) sp[j] = ivec_dot(s, K[size_t(j)]);
    if (ivec_is_zero(sp))
      fail(ErrorCode::EmptyInterior, "strict inequality vanishes on the feasible subspace");
    proj.push_back(sp);
  }
  IVec y(m);
  if (!proj.empty()) {
    Cone d = cone_from_inequalities(proj, m);
    for (const IVec& r : d.rays) y = ivec_add(y, r);
    for (const IVec& sp : proj)
      if (ivec_dot(sp, y) <= 0)
        fail(ErrorCode::EmptyInterior, "strict system has empty interior");
  }
  IVec x(dim);
  for (int j = 0; j < m; ++j) ivec_axpy(x, y[size_t(j)], K[size_t(j)]);
  for (const IVec& e : equalities)
    check(ivec_dot(e, x) == 0, ErrorCode::InvariantViolation, "interior_point: equality violated");
  for (const IVec& s : strict)
    check(ivec_dot(s, x) > 0, ErrorCode::InvariantViolation, "interior_point: strictness violated");
  return x;
}

}  // namespace dimod
