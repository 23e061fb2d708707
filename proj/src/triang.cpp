#include "dimod/triang.hpp"

#include <algorithm>
#include <map>

namespace dimod {

namespace {

bool v2_less(const V2& a, const V2& b) {
  if (a[0] != b[0]) return a[0] < b[0];
  return a[1] < b[1];
}

std::vector<V2> convex_hull_ccw(std::vector<V2> pts) {
  std::sort(pts.begin(), pts.end(), v2_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n < 3) return {};
  std::vector<V2> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) return {};
  return h;
}

}  // namespace

Polygon2 polygon_from_points(const std::vector<V2>& pts) {
  Polygon2 poly;
  poly.hull = convex_hull_ccw(pts);
  check(!poly.hull.empty(), ErrorCode::DegeneratePolygon,
        "point set does not span a 2-dimensional polygon");
  for (size_t i = 0; i < poly.hull.size(); ++i) {
    const V2& a = poly.hull[i];
    const V2& b = poly.hull[(i + 1) % poly.hull.size()];
    poly.area2 += a[0] * b[1] - b[0] * a[1];
  }
  check(poly.area2 > 0, ErrorCode::DegeneratePolygon, "degenerate hull area");

  Int xmin = poly.hull[0][0], xmax = xmin, ymin = poly.hull[0][1], ymax = ymin;
  for (const V2& v : poly.hull) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
    ymin = std::min(ymin, v[1]);
    ymax = std::max(ymax, v[1]);
  }
  for (Int x = xmin; x <= xmax; ++x)
    for (Int y = ymin; y <= ymax; ++y) {
      V2 p{x, y};
      bool inside = true;
      for (size_t i = 0; i < poly.hull.size() && inside; ++i)
        if (cross2(poly.hull[i], poly.hull[(i + 1) % poly.hull.size()], p) < 0)
          inside = false;
      if (inside) poly.points.push_back(p);
    }
  std::sort(poly.points.begin(), poly.points.end(), v2_less);
  return poly;
}

bool unimodular_triangle(const V2& a, const V2& b, const V2& c) {
  Int d = cross2(a, b, c);
  return d == 1 || d == -1;
}

namespace {

// true when every vertex of (q0,q1,q2) lies on the closed right side of the
// directed line p0 -> p1, which has the first triangle's interior on its left
bool edge_separates(const V2& p0, const V2& p1, const V2& q0, const V2& q1, const V2& q2) {
  return cross2(p0, p1, q0) <= 0 && cross2(p0, p1, q1) <= 0 && cross2(p0, p1, q2) <= 0;
}

}  // namespace

bool interiors_disjoint(const V2& a0, const V2& a1, const V2& a2,
                        const V2& b0, const V2& b1, const V2& b2) {
  V2 A[3] = {a0, a1, a2};
  V2 B[3] = {b0, b1, b2};
  if (cross2(A[0], A[1], A[2]) < 0) std::swap(A[1], A[2]);
  if (cross2(B[0], B[1], B[2]) < 0) std::swap(B[1], B[2]);
  for (int i = 0; i < 3; ++i)
    if (edge_separates(A[i], A[(i + 1) % 3], B[0], B[1], B[2])) return true;
  for (int i = 0; i < 3; ++i)
    if (edge_separates(B[i], B[(i + 1) % 3], A[0], A[1], A[2])) return true;
  return false;
}

void verify_lift_certificate(const Polygon2& poly,
                             const std::vector<std::array<int, 3>>& tris,
                             const IVec& lift) {
  check(lift.size() == poly.points.size(), ErrorCode::InvariantViolation,
        "lift certificate has wrong length");
  for (const auto& t : tris) {
    std::array<int, 3> o = t;
    if (cross2(poly.points[size_t(o[0])], poly.points[size_t(o[1])],
               poly.points[size_t(o[2])]) < 0)
      std::swap(o[1], o[2]);
    const V2& pa = poly.points[size_t(o[0])];
    const V2& pb = poly.points[size_t(o[1])];
    const V2& pc = poly.points[size_t(o[2])];
    Int d = cross2(pa, pb, pc);
    check(d > 0, ErrorCode::InvariantViolation, "degenerate triangle in certificate check");
    for (size_t m = 0; m < poly.points.size(); ++m) {
      if (int(m) == t[0] || int(m) == t[1] || int(m) == t[2]) continue;
      const V2& pm = poly.points[m];
      Int A = cross2(pm, pb, pc);
      Int B = cross2(pa, pm, pc);
      Int C = cross2(pa, pb, pm);
      // A*pa + B*pb + C*pc = d*pm with A+B+C = d
      Int excess = d * lift[m] - (A * lift[size_t(o[0])] + B * lift[size_t(o[1])] +
                                  C * lift[size_t(o[2])]);
      check(excess > 0, ErrorCode::InvariantViolation,
            "lift certificate is not strictly convex");
    }
  }
}

std::vector<Triangulation> regular_unimodular_triangulations(const Polygon2& poly) {
  const std::vector<V2>& pts = poly.points;
  int n = int(pts.size());
  std::vector<std::array<int, 3>> cand;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (unimodular_triangle(pts[size_t(i)], pts[size_t(j)], pts[size_t(k)]))
          cand.push_back({i, j, k});
  int T = int(cand.size());
  std::vector<std::vector<char>> compat(size_t(T), std::vector<char>(size_t(T), 0));
  for (int a = 0; a < T; ++a)
    for (int b = a + 1; b < T; ++b) {
      bool ok = interiors_disjoint(
          pts[size_t(cand[size_t(a)][0])], pts[size_t(cand[size_t(a)][1])],
          pts[size_t(cand[size_t(a)][2])], pts[size_t(cand[size_t(b)][0])],
          pts[size_t(cand[size_t(b)][1])], pts[size_t(cand[size_t(b)][2])]);
      compat[size_t(a)][size_t(b)] = compat[size_t(b)][size_t(a)] = ok;
    }

  long long target = to_ll(poly.area2);
  std::vector<int> chosen;
  std::vector<std::vector<int>> coverings;
  auto dfs = [&](auto&& self, int start) -> void {
    if ((long long)chosen.size() == target) {
      coverings.push_back(chosen);
      return;
    }
    for (int t = start; t < T; ++t) {
      if (T - t < int(target - (long long)chosen.size())) break;
      bool ok = true;
      for (int c : chosen)
        if (!compat[size_t(c)][size_t(t)]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(t);
      self(self, t + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);

  std::vector<Triangulation> out;
  for (const std::vector<int>& cov : coverings) {
    std::vector<std::array<int, 3>> tris;
    std::vector<char> used(size_t(n), 0);
    for (int t : cov) {
      tris.push_back(cand[size_t(t)]);
      for (int v : cand[size_t(t)]) used[size_t(v)] = 1;
    }
    for (int v = 0; v < n; ++v)
      check(used[size_t(v)], ErrorCode::InvariantViolation,
            "unimodular covering misses a lattice point");

    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (size_t ti = 0; ti < tris.size(); ++ti) {
      const auto& t = tris[ti];
      int pairs[3][2] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
      for (auto& pr : pairs) edge_tris[{pr[0], pr[1]}].push_back(int(ti));
    }
    std::vector<IVec> rows;
    bool broken = false;
    for (const auto& [e, owners] : edge_tris) {
      check(owners.size() <= 2, ErrorCode::InvariantViolation,
            "edge shared by more than two triangles");
      if (owners.size() != 2) continue;
      auto opposite = [&](int ti) {
        for (int v : tris[size_t(ti)])
          if (v != e.first && v != e.second) return v;
        return -1;
      };
      int r = opposite(owners[0]);
      int s = opposite(owners[1]);
      const V2& P = pts[size_t(e.first)];
      const V2& Q = pts[size_t(e.second)];
      const V2& R = pts[size_t(r)];
      const V2& S = pts[size_t(s)];
      Int D = cross2(P, Q, R);
      Int A = cross2(S, Q, R);
      Int B = cross2(P, S, R);
      Int C = cross2(P, Q, S);
      if (D < 0) {
        D = -D;
        A = -A;
        B = -B;
        C = -C;
      }
      check(C < 0, ErrorCode::InvariantViolation, "fold points the wrong way");
      IVec row(static_cast<size_t>(n));
      row[size_t(s)] += D;
      row[size_t(e.first)] -= A;
      row[size_t(e.second)] -= B;
      row[size_t(r)] -= C;
      rows.push_back(row);
    }
    IVec lift;
    try {
      lift = interior_point(rows, {}, n);
    } catch (const DimodError& err) {
      if (err.code() == ErrorCode::EmptyInterior) broken = true;
      else throw;
    }
    if (broken) continue;
    verify_lift_certificate(poly, tris, lift);
    Triangulation tr;
    tr.tris = tris;
    tr.lift = lift;
    out.push_back(tr);
  }
  return out;
}

}  // namespace dimod
