#include "dimod/moduli.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dimod/errors.hpp"
#include "dimod/intmat.hpp"

namespace dimod {
namespace {

Int det3_rows(const IVec& x, const IVec& y, const IVec& z) {
  return x[0] * (y[1] * z[2] - y[2] * z[1]) -
         x[1] * (y[0] * z[2] - y[2] * z[0]) +
         x[2] * (y[0] * z[1] - y[1] * z[0]);
}

// Coordinates of s in the unimodular basis (x, y, z).
IVec in_basis(const IVec& x, const IVec& y, const IVec& z, const IVec& s) {
  IntMat cols = IntMat::from_rows({x, y, z}, 3).transposed();
  auto c = solve_integer(cols, s);
  check(c.has_value(), ErrorCode::InvariantViolation,
        "vector escapes a unimodular ray basis");
  return *c;
}

V2 ray_point(const FanRay& r) { return {r.nu[0], r.nu[1]}; }

int point_index(const Polygon2& poly, const V2& p) {
  auto it = std::lower_bound(poly.points.begin(), poly.points.end(), p,
                             [](const V2& a, const V2& b) { return a < b; });
  if (it == poly.points.end() || !(*it == p)) return -1;
  return int(it - poly.points.begin());
}

// Sorts cones, derives walls, and verifies every fan invariant.
void finish_fan(FanModel& f) {
  check(!f.cones.empty(), ErrorCode::FanConsistency, "fan has no maximal cone");
  for (auto& c : f.cones) std::sort(c.rays.begin(), c.rays.end());
  std::sort(f.cones.begin(), f.cones.end(),
            [](const FanCone& x, const FanCone& y) { return x.rays < y.rays; });
  for (size_t i = 0; i + 1 < f.cones.size(); ++i)
    check(f.cones[i].rays != f.cones[i + 1].rays, ErrorCode::FanConsistency,
          "duplicate maximal cone");

  for (const auto& c : f.cones) {
    check(c.rays[0] != c.rays[1] && c.rays[1] != c.rays[2],
          ErrorCode::FanConsistency, "maximal cone has repeated rays");
    Int dt = det3_rows(f.rays[size_t(c.rays[0])].nu, f.rays[size_t(c.rays[1])].nu,
                       f.rays[size_t(c.rays[2])].nu);
    check(dt == 1 || dt == -1, ErrorCode::FanConsistency,
          "maximal cone is not unimodular");
  }

  check(Int(f.cones.size()) == f.polygon.poly.area2, ErrorCode::FanConsistency,
        "cone count differs from the normalized polygon area");

  std::vector<char> used(f.rays.size(), 0);
  for (const auto& c : f.cones)
    for (int r : c.rays) used[size_t(r)] = 1;
  for (size_t r = 0; r < f.rays.size(); ++r) {
    check(used[r], ErrorCode::FanConsistency, "ray lies in no maximal cone");
    check(point_index(f.polygon.poly, ray_point(f.rays[r])) >= 0,
          ErrorCode::FanConsistency, "ray is not a polygon lattice point");
  }

  for (size_t i = 0; i < f.cones.size(); ++i)
    for (size_t j = i + 1; j < f.cones.size(); ++j) {
      const auto& a = f.cones[i].rays;
      const auto& b = f.cones[j].rays;
      check(interiors_disjoint(ray_point(f.rays[size_t(a[0])]),
                               ray_point(f.rays[size_t(a[1])]),
                               ray_point(f.rays[size_t(a[2])]),
                               ray_point(f.rays[size_t(b[0])]),
                               ray_point(f.rays[size_t(b[1])]),
                               ray_point(f.rays[size_t(b[2])])),
            ErrorCode::FanConsistency, "maximal cones overlap");
    }

  std::map<std::array<int, 2>, std::vector<std::pair<int, int>>> walls;
  for (size_t ci = 0; ci < f.cones.size(); ++ci) {
    const auto& r = f.cones[ci].rays;
    walls[{r[0], r[1]}].push_back({int(ci), r[2]});
    walls[{r[0], r[2]}].push_back({int(ci), r[1]});
    walls[{r[1], r[2]}].push_back({int(ci), r[0]});
  }
  f.walls.clear();
  for (const auto& [pr, owners] : walls) {
    check(owners.size() <= 2, ErrorCode::FanConsistency,
          "two-dimensional cone shared by more than two maximal cones");
    FanWall w;
    w.rays = pr;
    for (const auto& [ci, op] : owners) {
      w.cones.push_back(ci);
      w.opposite.push_back(op);
    }
    w.compact = owners.size() == 2;
    if (w.compact) {
      IVec c = in_basis(f.rays[size_t(pr[0])].nu, f.rays[size_t(pr[1])].nu,
                        f.rays[size_t(w.opposite[0])].nu,
                        f.rays[size_t(w.opposite[1])].nu);
      check(c[2] == -1, ErrorCode::InvariantViolation,
            "opposite rays of a wall are not separated by it");
      w.a = c[0];
      w.b = c[1];
    }
    f.walls.push_back(std::move(w));
  }
}

}  // namespace

FanModel fan(const Dimer& d, const IVec& theta) {
  FanModel f;
  f.polygon = characteristic_polygon(d);
  require_strongly_generic(d, theta);

  std::map<IVec, std::vector<int>> groups;
  for (const auto& z : stable_patterns(d, theta)) {
    if (orbit_dim(d, z) != 2) continue;
    auto it = std::lower_bound(d.matchings.begin(), d.matchings.end(), z);
    check(it != d.matchings.end() && *it == z, ErrorCode::FanConsistency,
          "zero set of a rigid divisor pattern is not a perfect matching");
    int idx = int(it - d.matchings.begin());
    IVec nu = {d.matching_class[size_t(idx)][0], d.matching_class[size_t(idx)][1],
               Int(1)};
    groups[nu].push_back(idx);
  }
  for (auto& [nu, ms] : groups) {
    FanRay r;
    r.nu = nu;
    std::sort(ms.begin(), ms.end());
    r.matchings = ms;
    r.divisor_matching = ms.front();
    if (ms.size() > 1) f.multiplicity_anomaly = true;
    f.rays.push_back(std::move(r));
  }

  for (auto& z : fixed_points(d, theta)) {
    FanCone c;
    std::vector<int> hit;
    for (size_t r = 0; r < f.rays.size(); ++r)
      for (int m : f.rays[r].matchings)
        if (std::includes(z.begin(), z.end(), d.matchings[size_t(m)].begin(),
                          d.matchings[size_t(m)].end())) {
          hit.push_back(int(r));
          break;
        }
    check(hit.size() == 3, ErrorCode::FanConsistency,
          "fixed point does not span a three-ray cone");
    c.rays = {hit[0], hit[1], hit[2]};
    c.fixed_pattern = std::move(z);
    f.cones.push_back(std::move(c));
  }
  finish_fan(f);
  return f;
}

bool same_fan(const FanModel& f, const FanModel& g) {
  if (f.rays.size() != g.rays.size() || f.cones.size() != g.cones.size())
    return false;
  for (size_t i = 0; i < f.rays.size(); ++i)
    if (f.rays[i].nu != g.rays[i].nu) return false;
  for (size_t i = 0; i < f.cones.size(); ++i)
    if (f.cones[i].rays != g.cones[i].rays) return false;
  return true;
}

int ray_by_class(const FanModel& f, const IVec& nu) {
  for (size_t i = 0; i < f.rays.size(); ++i)
    if (f.rays[i].nu == nu) return int(i);
  return -1;
}

int ray_of_matching(const FanModel& f, int matching) {
  for (size_t i = 0; i < f.rays.size(); ++i)
    if (std::binary_search(f.rays[i].matchings.begin(),
                           f.rays[i].matchings.end(), matching))
      return int(i);
  return -1;
}

Triangulation fan_triangulation(const FanModel& f) {
  Triangulation t;
  for (const auto& c : f.cones) {
    std::array<int, 3> tri{};
    for (int k = 0; k < 3; ++k) {
      int p = point_index(f.polygon.poly, ray_point(f.rays[size_t(c.rays[size_t(k)])]));
      check(p >= 0, ErrorCode::FanConsistency, "ray is not a polygon lattice point");
      tri[size_t(k)] = p;
    }
    std::sort(tri.begin(), tri.end());
    t.tris.push_back(tri);
  }
  std::sort(t.tris.begin(), t.tris.end());
  return t;
}

FanModel flipped_fan(const FanModel& f, int wall) {
  check(wall >= 0 && wall < int(f.walls.size()), ErrorCode::InvalidModel,
        "wall index out of range");
  const FanWall& w = f.walls[size_t(wall)];
  check(w.compact, ErrorCode::NonCompactCurve,
        "only an interior wall can be flipped");
  FanModel g;
  g.polygon = f.polygon;
  g.rays = f.rays;
  g.multiplicity_anomaly = f.multiplicity_anomaly;
  for (size_t i = 0; i < f.cones.size(); ++i) {
    if (int(i) == w.cones[0] || int(i) == w.cones[1]) continue;
    FanCone c;
    c.rays = f.cones[i].rays;
    g.cones.push_back(std::move(c));
  }
  for (int k = 0; k < 2; ++k) {
    FanCone c;
    c.rays = {w.rays[size_t(k)], w.opposite[0], w.opposite[1]};
    g.cones.push_back(std::move(c));
  }
  finish_fan(g);
  return g;
}

DivisorClass canonical_class(const FanModel& f, const DivisorClass& raw) {
  check(raw.size() == f.rays.size(), ErrorCode::InvalidModel,
        "divisor class length differs from the ray count");
  const auto& c0 = f.cones.front().rays;
  IntMat a = IntMat::from_rows({f.rays[size_t(c0[0])].nu,
                                f.rays[size_t(c0[1])].nu,
                                f.rays[size_t(c0[2])].nu},
                               3);
  auto u = solve_integer(
      a, {raw[size_t(c0[0])], raw[size_t(c0[1])], raw[size_t(c0[2])]});
  check(u.has_value(), ErrorCode::InvariantViolation,
        "base cone fails to normalize a divisor class");
  DivisorClass out(f.rays.size());
  for (size_t r = 0; r < f.rays.size(); ++r)
    out[r] = raw[r] - ivec_dot(*u, f.rays[r].nu);
  return out;
}

bool classes_equivalent(const FanModel& f, const DivisorClass& x,
                        const DivisorClass& y) {
  return canonical_class(f, x) == canonical_class(f, y);
}

std::vector<DivisorClass> tautological_classes(const Dimer& d, const FanModel& f) {
  const Quiver& q = d.quiver;
  auto contrib = [&](int a) {
    DivisorClass c(f.rays.size(), Int(0));
    for (size_t r = 0; r < f.rays.size(); ++r) {
      const auto& match = d.matchings[size_t(f.rays[r].divisor_matching)];
      if (std::binary_search(match.begin(), match.end(), a)) c[r] = 1;
    }
    return c;
  };

  std::vector<std::vector<int>> out_arrows(size_t(q.nv));
  for (int a = 0; a < q.na; ++a) out_arrows[size_t(q.src[a])].push_back(a);

  std::vector<DivisorClass> raw(size_t(q.nv));
  std::vector<char> seen(size_t(q.nv), 0);
  std::vector<int> order = {d.v0};
  raw[size_t(d.v0)] = DivisorClass(f.rays.size(), Int(0));
  seen[size_t(d.v0)] = 1;
  for (size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int a : out_arrows[size_t(v)]) {
      int w = q.dst[a];
      if (seen[size_t(w)]) continue;
      seen[size_t(w)] = 1;
      raw[size_t(w)] = ivec_add(raw[size_t(v)], contrib(a));
      order.push_back(w);
    }
  }
  for (int v = 0; v < q.nv; ++v)
    check(seen[size_t(v)], ErrorCode::Unreachable,
          "vertex unreachable from the base vertex");

  // any two paths to the same vertex give linearly equivalent classes
  for (int a = 0; a < q.na; ++a)
    check(classes_equivalent(f, ivec_add(raw[size_t(q.src[a])], contrib(a)),
                             raw[size_t(q.dst[a])]),
          ErrorCode::InvariantViolation,
          "tautological class depends on the chosen path");

  std::vector<DivisorClass> cls;
  for (int v = 0; v < q.nv; ++v)
    cls.push_back(canonical_class(f, raw[size_t(v)]));
  return cls;
}

DivisorClass line_bundle(const FanModel& f, const std::vector<DivisorClass>& cls,
                         const IVec& eta) {
  check(eta.size() == cls.size(), ErrorCode::InvalidModel,
        "parameter length differs from the class table");
  DivisorClass out(f.rays.size(), Int(0));
  for (size_t v = 0; v < cls.size(); ++v)
    out = ivec_add(out, ivec_scaled(cls[v], eta[v]));
  return out;
}

Int curve_degree(const FanModel& f, int wall, const DivisorClass& cls) {
  check(wall >= 0 && wall < int(f.walls.size()), ErrorCode::InvalidModel,
        "wall index out of range");
  const FanWall& w = f.walls[size_t(wall)];
  check(w.compact, ErrorCode::NonCompactCurve,
        "degree is defined only on interior walls");
  check(cls.size() == f.rays.size(), ErrorCode::InvalidModel,
        "divisor class length differs from the ray count");
  return cls[size_t(w.opposite[0])] + cls[size_t(w.opposite[1])] -
         w.a * cls[size_t(w.rays[0])] - w.b * cls[size_t(w.rays[1])];
}

Int curve_pairing(const FanModel& f, const std::vector<DivisorClass>& cls,
                  const IVec& theta, int wall) {
  check(theta.size() == cls.size(), ErrorCode::InvalidModel,
        "parameter length differs from the class table");
  Int sum = 0;
  for (const Int& x : theta) sum += x;
  check(sum == 0, ErrorCode::InvalidModel,
        "stability parameter entries must sum to zero");
  Int direct = 0;
  for (size_t v = 0; v < cls.size(); ++v)
    direct += (curve_degree(f, wall, cls[v]) + 1) * theta[v];
  Int via = curve_degree(f, wall, line_bundle(f, cls, theta));
  check(direct == via, ErrorCode::InvariantViolation,
        "curve pairing disagrees with the bundle degree");
  return via;
}

std::optional<std::vector<int>> compact_star_link(const FanModel& f, int ray) {
  check(ray >= 0 && ray < int(f.rays.size()), ErrorCode::InvalidModel,
        "ray index out of range");
  std::vector<std::array<int, 2>> pairs;  // neighbor rays per star cone
  for (const auto& c : f.cones) {
    std::vector<int> rest;
    for (int r : c.rays)
      if (r != ray) rest.push_back(r);
    if (rest.size() == 2) pairs.push_back({rest[0], rest[1]});
  }
  if (pairs.empty()) return std::nullopt;

  std::map<int, std::vector<int>> adj;
  for (const auto& p : pairs) {
    adj[p[0]].push_back(p[1]);
    adj[p[1]].push_back(p[0]);
  }
  for (const auto& [r, ns] : adj)
    if (ns.size() != 2) return std::nullopt;
  if (pairs.size() != adj.size()) return std::nullopt;

  int start = adj.begin()->first;
  std::vector<int> link;
  int prev = -1, cur = start;
  do {
    link.push_back(cur);
    if (link.size() > adj.size()) return std::nullopt;
    const auto& ns = adj[cur];
    int nxt = prev == -1 ? std::min(ns[0], ns[1])
                         : (ns[0] == prev ? ns[1] : ns[0]);
    prev = cur;
    cur = nxt;
  } while (cur != start);
  if (link.size() != adj.size()) return std::nullopt;
  return link;
}

std::pair<Int, Int> surface_chi(const FanModel& f, int ray,
                                const DivisorClass& cls) {
  check(cls.size() == f.rays.size(), ErrorCode::InvalidModel,
        "divisor class length differs from the ray count");
  auto link_opt = compact_star_link(f, ray);
  check(link_opt.has_value(), ErrorCode::NonCompactDivisor,
        "ray divisor is not a complete surface");
  const auto& link = *link_opt;
  int m = int(link.size());
  check(m >= 3, ErrorCode::InvariantViolation, "divisor link is degenerate");

  std::vector<Int> beta(static_cast<size_t>(m)), rest(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    int ip = (i + 1) % m, im = (i + m - 1) % m;
    IVec c = in_basis(f.rays[size_t(ray)].nu, f.rays[size_t(link[size_t(i)])].nu,
                      f.rays[size_t(link[size_t(im)])].nu,
                      f.rays[size_t(link[size_t(ip)])].nu);
    check(c[2] == -1, ErrorCode::InvariantViolation,
          "divisor link is not a closed surface fan");
    beta[size_t(i)] = c[1];
    rest[size_t(i)] = cls[size_t(link[size_t(i)])] - cls[size_t(ray)];
  }

  Int lld = 0, ldd = 0;
  for (int i = 0; i < m; ++i) {
    int ip = (i + 1) % m;
    lld += -beta[size_t(i)] * rest[size_t(i)] * rest[size_t(i)] +
           2 * rest[size_t(i)] * rest[size_t(ip)];
    ldd += rest[size_t(i)] * (beta[size_t(i)] - 2);
  }
  check((lld - ldd) % 2 == 0, ErrorCode::InvariantViolation,
        "surface Riemann-Roch parity failure");
  // Riemann-Roch; the dual value chi((-L)|_D tensor omega) coincides with
  // chi(L|_D) by Serre duality and is reported separately for the caller.
  Int chi_l = 1 + (lld - ldd) / 2;
  return {chi_l, chi_l};
}

}  // namespace dimod
