#include "dimod/chambers.hpp"

#include <algorithm>
#include <map>

#include "dimod/errors.hpp"

namespace dimod {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) p[size_t(i)] = i;
  }
  int find(int x) {
    while (p[size_t(x)] != x) x = p[size_t(x)] = p[size_t(p[size_t(x)])];
    return x;
  }
  void unite(int x, int y) { p[size_t(find(x))] = find(y); }
};

// head node of a dart: 2e+1 runs black->white, 2e the reverse
int head_node(const Dimer& d, int dart) {
  const DimerEdge& e = d.model.edges[size_t(dart >> 1)];
  return (dart & 1) ? e.white : e.black;
}

std::vector<char> face_mask(const Dimer& d, const std::vector<int>& faces) {
  std::vector<char> in(d.faces.size(), 0);
  for (int f : faces) {
    check(f >= 0 && f < int(d.faces.size()), ErrorCode::InvalidModel, "face id out of range");
    in[size_t(f)] = 1;
  }
  return in;
}

Int theta_of(const IVec& theta, const std::vector<int>& subset) {
  Int s = 0;
  for (int v : subset) s += theta[size_t(v)];
  return s;
}

std::vector<int> complement_of(int nv, const std::vector<int>& subset) {
  std::vector<char> in(static_cast<size_t>(nv), 0);
  for (int v : subset) in[size_t(v)] = 1;
  std::vector<int> out;
  for (int v = 0; v < nv; ++v)
    if (!in[size_t(v)]) out.push_back(v);
  return out;
}

IVec sign_canonical(IVec v) {
  for (const Int& x : v) {
    if (x > 0) break;
    if (x < 0) return ivec_neg(v);
  }
  return v;
}

// proper nonempty vertex subsets as masks
std::vector<unsigned> proper_masks(int nv) {
  check(nv <= 16, ErrorCode::InvalidModel, "vertex count too large for subset enumeration");
  std::vector<unsigned> out;
  for (unsigned m = 1; m + 1 < (1u << nv); ++m) out.push_back(m);
  return out;
}

std::vector<int> mask_subset(unsigned m, int nv) {
  std::vector<int> out;
  for (int v = 0; v < nv; ++v)
    if (m & (1u << v)) out.push_back(v);
  return out;
}

// Hyperplanes of all proper nonempty subsets that are not census walls,
// sign-canonical and deduped; the census cone is refined by choosing a side of
// each in turn, which pins down one strongly generic cell deterministically.
std::vector<IVec> free_hyperplanes(const Dimer& d, const std::vector<IVec>& census_normals) {
  std::vector<IVec> fixed;
  for (const IVec& w : census_normals) fixed.push_back(sign_canonical(w));
  std::sort(fixed.begin(), fixed.end(), ivec_less);
  std::vector<IVec> out;
  for (unsigned m : proper_masks(d.quiver.nv)) {
    IVec h = sign_canonical(subset_normal(d, mask_subset(m, d.quiver.nv)));
    if (!std::binary_search(fixed.begin(), fixed.end(), h, ivec_less)) out.push_back(h);
  }
  std::sort(out.begin(), out.end(), ivec_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// policy 0 prefers the positive side of every free hyperplane, 1 the negative,
// 2 alternates; distinct policies land in distinct cells when the chamber is
// split, which is what the constancy check wants
IVec sample_cell(const std::vector<IVec>& census_normals, const std::vector<IVec>& hyps, int dim,
                 int policy) {
  std::vector<IVec> strict = census_normals;
  for (size_t i = 0; i < hyps.size(); ++i) {
    bool plus = policy == 0 || (policy == 2 && i % 2 == 0);
    strict.push_back(plus ? hyps[i] : ivec_neg(hyps[i]));
    try {
      interior_point(strict, {}, dim);
    } catch (const DimodError& e) {
      if (e.code() != ErrorCode::EmptyInterior) throw;
      strict.back() = plus ? ivec_neg(hyps[i]) : hyps[i];
    }
  }
  return interior_point(strict, {}, dim);
}

}  // namespace

IVec reduce_parameter(const Dimer& d, const IVec& theta) {
  check_theta(d, theta);
  IVec out;
  for (int v = 0; v < d.quiver.nv; ++v)
    if (v != d.v0) out.push_back(theta[size_t(v)]);
  return out;
}

IVec lift_parameter(const Dimer& d, const IVec& reduced) {
  check(int(reduced.size()) == d.quiver.nv - 1, ErrorCode::InvalidModel,
        "reduced parameter has wrong length");
  IVec out(static_cast<size_t>(d.quiver.nv));
  Int sum = 0;
  size_t j = 0;
  for (int v = 0; v < d.quiver.nv; ++v) {
    if (v == d.v0) continue;
    out[size_t(v)] = reduced[j];
    sum += reduced[j];
    ++j;
  }
  out[size_t(d.v0)] = -sum;
  return out;
}

IVec reduce_functional(const Dimer& d, const IVec& coeff) {
  check(int(coeff.size()) == d.quiver.nv, ErrorCode::InvalidModel,
        "functional has wrong length");
  IVec out;
  for (int v = 0; v < d.quiver.nv; ++v)
    if (v != d.v0) out.push_back(coeff[size_t(v)] - coeff[size_t(d.v0)]);
  return out;
}

IVec subset_normal(const Dimer& d, const std::vector<int>& subset) {
  IVec chi(static_cast<size_t>(d.quiver.nv));
  for (int v : subset) {
    check(v >= 0 && v < d.quiver.nv, ErrorCode::InvalidModel, "vertex id out of range");
    chi[size_t(v)] = 1;
  }
  return reduce_functional(d, chi);
}

bool region_connected(const Dimer& d, const std::vector<int>& faces) {
  if (faces.empty()) return true;
  std::vector<char> in = face_mask(d, faces);
  UnionFind uf(int(d.faces.size()));
  std::vector<int> rep(d.model.nodes.size(), -1);
  for (int f : faces)
    for (int dart : d.faces[size_t(f)].darts) {
      int n = head_node(d, dart);
      if (rep[size_t(n)] < 0)
        rep[size_t(n)] = f;
      else
        uf.unite(rep[size_t(n)], f);
    }
  int root = uf.find(faces.front());
  for (int f : faces)
    if (uf.find(f) != root) return false;
  return true;
}

int region_euler(const Dimer& d, const std::vector<int>& faces) {
  std::vector<char> node_in(d.model.nodes.size(), 0), edge_in(d.model.edges.size(), 0);
  for (int f : faces)
    for (int dart : d.faces[size_t(f)].darts) {
      node_in[size_t(head_node(d, dart))] = 1;
      edge_in[size_t(dart >> 1)] = 1;
    }
  int v = int(std::count(node_in.begin(), node_in.end(), 1));
  int e = int(std::count(edge_in.begin(), edge_in.end(), 1));
  return v - e + int(faces.size());
}

int region_boundary_components(const Dimer& d, const std::vector<int>& faces) {
  std::vector<char> in = face_mask(d, faces);
  UnionFind uf(int(d.model.nodes.size()));
  std::vector<int> boundary;
  for (const DimerEdge& e : d.model.edges) {
    bool left = in[size_t(d.dart_face[size_t(2 * e.id)])];
    bool right = in[size_t(d.dart_face[size_t(2 * e.id + 1)])];
    if (left != right) {
      boundary.push_back(e.id);
      uf.unite(e.black, e.white);
    }
  }
  std::vector<int> roots;
  for (int e : boundary) roots.push_back(uf.find(d.model.edges[size_t(e)].black));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return int(roots.size());
}

Chamber chamber_of(const Dimer& d, const IVec& theta) {
  require_strongly_generic(d, theta);
  Chamber c;
  c.seed = theta;
  c.census = support_census(d, theta);
  int dim = d.quiver.nv - 1;

  std::vector<IVec> census_normals;
  for (const auto& r : c.census) census_normals.push_back(subset_normal(d, r));
  c.facet_normals = irredundant_facets(census_normals, dim);
  c.cone = cone_from_inequalities(c.facet_normals, dim);

  std::vector<IVec> hyps = free_hyperplanes(d, census_normals);
  c.interior = lift_parameter(d, sample_cell(census_normals, hyps, dim, 0));
  require_strongly_generic(d, c.interior);
  for (const IVec& w : census_normals)
    check(ivec_dot(w, reduce_parameter(d, c.interior)) > 0, ErrorCode::InvariantViolation,
          "canonical interior parameter escapes the chamber");

  c.stable = stable_patterns(d, c.interior);
  check(stable_patterns(d, theta) == c.stable, ErrorCode::InvariantViolation,
        "stable patterns vary across the parameter chamber");
  for (int policy = 1; policy <= 2; ++policy) {
    IVec s = lift_parameter(d, sample_cell(census_normals, hyps, dim, policy));
    check(support_census(d, s) == c.census && stable_patterns(d, s) == c.stable,
          ErrorCode::InvariantViolation, "stable patterns vary across the parameter chamber");
  }

  c.fan = fan(d, c.interior);
  c.cls = tautological_classes(d, c.fan);
  return c;
}

WallDescriptor classify_wall(const Dimer& d, const Chamber& c, const IVec& normal) {
  check(std::find(c.facet_normals.begin(), c.facet_normals.end(), normal) !=
            c.facet_normals.end(),
        ErrorCode::InvalidModel, "not a facet normal of this chamber");
  WallDescriptor w;
  w.normal = normal;

  // the census subsets cutting out this facet; distinct subsets give distinct
  // functionals, so a second candidate can only be a relabelling and must
  // present the same topology
  std::vector<std::vector<int>> candidates;
  for (const auto& r : c.census)
    if (subset_normal(d, r) == normal) candidates.push_back(r);
  check(!candidates.empty(), ErrorCode::InvariantViolation,
        "facet normal without a census subset");
  auto signature = [&](const std::vector<int>& r) {
    std::vector<int> comp = complement_of(d.quiver.nv, r);
    return std::array<int, 3>{region_connected(d, r) ? 1 : 0,
                              region_connected(d, comp) ? 1 : 0,
                              region_boundary_components(d, r)};
  };
  for (size_t i = 1; i < candidates.size(); ++i)
    check(signature(candidates[i]) == signature(candidates.front()), ErrorCode::WallAmbiguity,
          "facet supported by subsets of different topology");
  w.r1 = candidates.front();
  w.r2 = complement_of(d.quiver.nv, w.r1);

  // wall-interior parameter: every census functional other than the facet's
  // own is strictly positive on the facet's relative interior
  std::vector<IVec> others;
  for (const auto& r : c.census) {
    IVec u = subset_normal(d, r);
    if (u != normal) others.push_back(u);
  }
  IVec t0 = interior_point(others, {normal}, d.quiver.nv - 1);
  check(ivec_dot(normal, t0) == 0, ErrorCode::InvariantViolation,
        "wall parameter misses the facet hyperplane");
  w.theta0 = lift_parameter(d, t0);

  w.r1_connected = region_connected(d, w.r1);
  w.r2_connected = region_connected(d, w.r2);
  check(w.r1_connected && w.r2_connected, ErrorCode::TopologyMismatch,
        "destabilizing support is disconnected");
  w.boundary_components = region_boundary_components(d, w.r1);
  check(w.boundary_components == 1 || w.boundary_components == 2, ErrorCode::TopologyMismatch,
        "dividing curve has unexpected component count");
  bool sc1 = w.r1_connected && region_euler(d, w.r1) == 1;
  bool sc2 = w.r2_connected && region_euler(d, w.r2) == 1;

  for (size_t wi = 0; wi < c.fan.walls.size(); ++wi)
    if (c.fan.walls[wi].compact && curve_pairing(c.fan, c.cls, w.theta0, int(wi)) == 0)
      w.zero_walls.push_back(int(wi));

  for (const Pattern& z : c.stable)
    for (const auto& r : closed_supports(d, z))
      if (theta_of(w.theta0, r) == 0) {
        w.strict_ss.push_back(z);
        break;
      }
  check(!w.strict_ss.empty(), ErrorCode::InvariantViolation, "facet without a degeneration");
  w.z_dim = 0;
  for (const Pattern& z : w.strict_ss) w.z_dim = std::max(w.z_dim, orbit_dim(d, z));

  w.z_class.assign(c.fan.rays.size(), 0);
  for (size_t ri = 0; ri < c.fan.rays.size(); ++ri) {
    const Pattern& z = d.matchings[size_t(c.fan.rays[ri].divisor_matching)];
    for (const auto& r : closed_supports(d, z))
      if (theta_of(w.theta0, r) == 0) {
        w.z_class[ri] = 1;
        break;
      }
  }

  // a compact divisor all of whose invariant curves degenerate would contract
  // to a point; that never happens on a crepant wall
  for (size_t ri = 0; ri < c.fan.rays.size(); ++ri) {
    if (!compact_star_link(c.fan, int(ri))) continue;
    bool all_zero = true;
    for (size_t wi = 0; wi < c.fan.walls.size(); ++wi) {
      const FanWall& fw = c.fan.walls[wi];
      if (fw.rays[0] != int(ri) && fw.rays[1] != int(ri)) continue;
      if (std::find(w.zero_walls.begin(), w.zero_walls.end(), int(wi)) == w.zero_walls.end()) {
        all_zero = false;
        break;
      }
    }
    if (all_zero)
      fail(ErrorCode::InvariantViolation, "compact divisor contracted to a point");
  }

  // the fiber class of a degenerate wall with relation n3 + n4 = a n1 + b n2
  // sweeps the divisor of n1 exactly when b = 0 (self-intersection zero there)
  std::vector<int> swept;
  for (int wi : w.zero_walls) {
    const FanWall& fw = c.fan.walls[size_t(wi)];
    if (fw.b == 0) swept.push_back(fw.rays[0]);
    if (fw.a == 0) swept.push_back(fw.rays[1]);
  }
  std::sort(swept.begin(), swept.end());
  swept.erase(std::unique(swept.begin(), swept.end()), swept.end());

  if (w.zero_walls.empty()) {
    w.type = 0;
    check(w.z_dim == 2, ErrorCode::InvariantViolation,
          "exchange wall with a degeneration that is not a divisor");
    check(!ivec_is_zero(w.z_class), ErrorCode::InvariantViolation,
          "exchange wall without a degenerate divisor");
    check(w.boundary_components == 1, ErrorCode::TopologyMismatch,
          "exchange wall needs a connected dividing curve");
    w.rigid_sub = sc1;
    w.rigid_quot = sc2;
    check(sc1 || sc2, ErrorCode::InvariantViolation,
          "exchange wall with no simply connected side");
  } else if (swept.empty()) {
    w.type = 1;
    check(w.zero_walls.size() == 1, ErrorCode::InvariantViolation,
          "several curves degenerate at a flop facet");
    check(w.z_dim == 1, ErrorCode::InvariantViolation,
          "flop facet with a degeneration that is not a curve");
    check(ivec_is_zero(w.z_class), ErrorCode::InvariantViolation,
          "flop facet with divisor support in the degeneration");
  } else {
    w.type = 3;
    check(swept.size() == 1, ErrorCode::InvariantViolation,
          "several divisors swept at one facet");
    w.contracted_ray = swept.front();
    for (int wi : w.zero_walls) {
      const FanWall& fw = c.fan.walls[size_t(wi)];
      check(fw.rays[0] == w.contracted_ray || fw.rays[1] == w.contracted_ray,
            ErrorCode::InvariantViolation, "degenerate curve off the swept divisor");
    }
    check(w.z_dim == 2, ErrorCode::InvariantViolation,
          "sweeping wall with a degeneration that is not a divisor");
    IVec expect(c.fan.rays.size(), 0);
    expect[size_t(w.contracted_ray)] = 1;
    check(w.z_class == expect, ErrorCode::InvariantViolation,
          "degeneration support disagrees with the swept divisor");
    check(w.boundary_components == 2, ErrorCode::TopologyMismatch,
          "sweeping wall needs a two-component dividing curve");
  }
  return w;
}

std::vector<WallDescriptor> facets(const Dimer& d, const Chamber& c) {
  std::vector<WallDescriptor> out;
  for (const IVec& n : c.facet_normals) out.push_back(classify_wall(d, c, n));
  return out;
}

std::vector<IVec> chamber_from_geometry(const Dimer& d, const Chamber& c) {
  int nv = d.quiver.nv, dim = nv - 1;
  std::vector<IVec> ineqs;
  for (size_t wi = 0; wi < c.fan.walls.size(); ++wi) {
    if (!c.fan.walls[wi].compact) continue;
    IVec coeff(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v)
      coeff[size_t(v)] = curve_degree(c.fan, int(wi), c.cls[size_t(v)]) + 1;
    ineqs.push_back(reduce_functional(d, coeff));
  }
  for (size_t ri = 0; ri < c.fan.rays.size(); ++ri) {
    if (!compact_star_link(c.fan, int(ri))) continue;
    for (int v = 0; v < nv; ++v) {
      IVec pos(static_cast<size_t>(nv)), neg(static_cast<size_t>(nv));
      for (int u = 0; u < nv; ++u) {
        IVec m = ivec_sub(c.cls[size_t(u)], c.cls[size_t(v)]);
        pos[size_t(u)] = surface_chi(c.fan, int(ri), m).first;
        // chi(M tensor omega) = chi of the dual of M by duality on the surface
        neg[size_t(u)] = -surface_chi(c.fan, int(ri), ivec_neg(m)).first;
      }
      ineqs.push_back(reduce_functional(d, pos));
      ineqs.push_back(reduce_functional(d, neg));
    }
  }
  std::vector<IVec> geo = dim == 0 ? std::vector<IVec>{} : irredundant_facets(ineqs, dim);
  if (geo != c.facet_normals) {
    for (const IVec& g : geo)
      if (std::find(c.facet_normals.begin(), c.facet_normals.end(), g) == c.facet_normals.end())
        fail(ErrorCode::GeometryMismatch,
             "sheaf positivity bounded by " + ivec_str(g) + " off the census description");
    for (const IVec& g : c.facet_normals)
      if (std::find(geo.begin(), geo.end(), g) == geo.end())
        fail(ErrorCode::GeometryMismatch,
             "census facet " + ivec_str(g) + " missing from the sheaf description");
    fail(ErrorCode::GeometryMismatch, "sheaf description disagrees with the census");
  }
  return geo;
}

}  // namespace dimod
