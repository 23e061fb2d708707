#include "oracle/oracle_geom.hpp"

#include <algorithm>

namespace oracle {

namespace {

Rat qcross(const QP& o, const QP& a, const QP& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<QP> clip_halfplane(const std::vector<QP>& poly, const QP& a, const QP& b) {
  std::vector<QP> out;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const QP& cur = poly[i];
    const QP& nxt = poly[(i + 1) % n];
    Rat sc = qcross(a, b, cur);
    Rat sn = qcross(a, b, nxt);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      Rat t = sc / (sc - sn);
      out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  return out;
}

Rat shoelace2(const std::vector<QP>& poly) {
  Rat s = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const QP& a = poly[i];
    const QP& b = poly[(i + 1) % poly.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  if (s < 0) s = -s;
  return s;
}

QP qp(const V2& v) { return {Rat(v[0]), Rat(v[1])}; }

}  // namespace

Rat triangle_intersection_area2(const V2& a0, const V2& a1, const V2& a2,
                                const V2& b0, const V2& b1, const V2& b2) {
  std::vector<QP> A = {qp(a0), qp(a1), qp(a2)};
  std::vector<QP> B = {qp(b0), qp(b1), qp(b2)};
  if (qcross(A[0], A[1], A[2]) < 0) std::swap(A[1], A[2]);
  if (qcross(B[0], B[1], B[2]) < 0) std::swap(B[1], B[2]);
  std::vector<QP> clipped = A;
  for (size_t i = 0; i < 3 && !clipped.empty(); ++i)
    clipped = clip_halfplane(clipped, B[i], B[(i + 1) % 3]);
  if (clipped.size() < 3) return Rat(0);
  return shoelace2(clipped);
}

long long count_unimodular_coverings(const std::vector<V2>& points, long long area) {
  int n = int(points.size());
  std::vector<std::array<int, 3>> cand;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Int d = dimod::cross2(points[size_t(i)], points[size_t(j)], points[size_t(k)]);
        if (d == 1 || d == -1) cand.push_back({i, j, k});
      }
  int T = int(cand.size());
  std::vector<std::vector<char>> ok(size_t(T), std::vector<char>(size_t(T), 0));
  for (int a = 0; a < T; ++a)
    for (int b = a + 1; b < T; ++b) {
      Rat inter = triangle_intersection_area2(
          points[size_t(cand[size_t(a)][0])], points[size_t(cand[size_t(a)][1])],
          points[size_t(cand[size_t(a)][2])], points[size_t(cand[size_t(b)][0])],
          points[size_t(cand[size_t(b)][1])], points[size_t(cand[size_t(b)][2])]);
      ok[size_t(a)][size_t(b)] = ok[size_t(b)][size_t(a)] = (inter == 0);
    }
  long long count = 0;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int start) -> void {
    if ((long long)chosen.size() == area) {
      ++count;
      return;
    }
    for (int t = start; t < T; ++t) {
      if (T - t < int(area - (long long)chosen.size())) break;
      bool good = true;
      for (int c : chosen)
        if (!ok[size_t(c)][size_t(t)]) {
          good = false;
          break;
        }
      if (!good) continue;
      chosen.push_back(t);
      self(self, t + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return count;
}

bool lift_is_strictly_convex(const std::vector<V2>& points,
                             const std::vector<std::array<int, 3>>& tris,
                             const IVec& lift) {
  for (const auto& t : tris) {
    const QP p[3] = {qp(points[size_t(t[0])]), qp(points[size_t(t[1])]), qp(points[size_t(t[2])])};
    Rat den = qcross(p[0], p[1], p[2]);
    if (den == 0) return false;
    // plane z = ax + by + c through the three lifted vertices, Cramer
    Rat z0 = Rat(lift[size_t(t[0])]);
    Rat z1 = Rat(lift[size_t(t[1])]);
    Rat z2 = Rat(lift[size_t(t[2])]);
    Rat a = (z0 * (p[1][1] - p[2][1]) + z1 * (p[2][1] - p[0][1]) + z2 * (p[0][1] - p[1][1])) / den;
    Rat b = (z0 * (p[2][0] - p[1][0]) + z1 * (p[0][0] - p[2][0]) + z2 * (p[1][0] - p[0][0])) / den;
    Rat c = z0 - a * p[0][0] - b * p[0][1];
    for (size_t m = 0; m < points.size(); ++m) {
      if (int(m) == t[0] || int(m) == t[1] || int(m) == t[2]) continue;
      Rat plane = a * Rat(points[m][0]) + b * Rat(points[m][1]) + c;
      if (!(Rat(lift[m]) > plane)) return false;
    }
  }
  return true;
}

int rational_rank(const std::vector<IVec>& rows, int cols) {
  std::vector<std::vector<Rat>> m;
  for (const IVec& r : rows) {
    std::vector<Rat> q;
    for (const Int& x : r) q.push_back(Rat(x));
    m.push_back(q);
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < int(m.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < int(m.size()); ++i)
      if (m[size_t(i)][size_t(col)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[size_t(rank)], m[size_t(piv)]);
    for (int i = 0; i < int(m.size()); ++i) {
      if (i == rank || m[size_t(i)][size_t(col)] == 0) continue;
      Rat f = m[size_t(i)][size_t(col)] / m[size_t(rank)][size_t(col)];
      for (int j = col; j < cols; ++j)
        m[size_t(i)][size_t(j)] -= f * m[size_t(rank)][size_t(j)];
    }
    ++rank;
  }
  return rank;
}

long long central_arrangement_regions_2d(const std::vector<IVec>& normals) {
  std::vector<IVec> dirs;
  for (const IVec& n0 : normals) {
    IVec n = dimod::primitive(n0);
    if (dimod::ivec_is_zero(n)) continue;
    for (const Int& x : n) {
      if (x > 0) break;
      if (x < 0) {
        n = dimod::ivec_neg(n);
        break;
      }
    }
    dirs.push_back(n);
  }
  std::sort(dirs.begin(), dirs.end(), dimod::ivec_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  long long k = (long long)dirs.size();
  return k == 0 ? 1 : 2 * k;
}

}  // namespace oracle
