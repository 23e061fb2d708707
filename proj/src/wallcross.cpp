#include "dimod/wallcross.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

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

IVec sign_canonical(IVec v) {
  for (const Int& x : v) {
    if (x > 0) break;
    if (x < 0) return ivec_neg(v);
  }
  return v;
}

std::vector<std::vector<int>> proper_subsets(int nv) {
  check(nv <= 16, ErrorCode::InvalidModel, "vertex count too large for subset enumeration");
  std::vector<std::vector<int>> out;
  for (unsigned m = 1; m + 1 < (1u << nv); ++m) {
    std::vector<int> s;
    for (int v = 0; v < nv; ++v)
      if (m & (1u << v)) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

Int iabs(Int x) { return x < 0 ? -x : x; }

// cand sits directly across the facet: strictly opposite side of the facet
// hyperplane, strictly generic, and separated from theta0 by no other subset
// hyperplane
bool directly_across(const Dimer& d, const IVec& normal, const IVec& t0, const IVec& cand) {
  for (const auto& s : proper_subsets(d.quiver.nv)) {
    IVec u = subset_normal(d, s);
    Int sc = ivec_dot(u, cand);
    if (u == normal) {
      if (sc >= 0) return false;
    } else if (u == ivec_neg(normal)) {
      if (sc <= 0) return false;
    } else {
      if (sc == 0) return false;
      Int s0 = ivec_dot(u, t0);
      if (s0 != 0 && (s0 > 0) != (sc > 0)) return false;
    }
  }
  return true;
}

IVec far_side_parameter(const Dimer& d, const Chamber& c, const WallDescriptor& w) {
  IVec ti = reduce_parameter(d, c.interior);
  IVec t0 = reduce_parameter(d, w.theta0);
  Int nn = ivec_dot(w.normal, w.normal), nx = ivec_dot(w.normal, ti);
  IVec cand = primitive(ivec_sub(ivec_scaled(ti, nn), ivec_scaled(w.normal, nx * 2)));
  if (directly_across(d, w.normal, t0, cand)) return cand;
  // reflection left the mirror cell; push from the interior parameter through
  // the wall point far enough to clear every hyperplane that separates them
  Int m = 1;
  for (const auto& s : proper_subsets(d.quiver.nv)) {
    IVec u = subset_normal(d, s);
    Int s0 = ivec_dot(u, t0);
    if (s0 != 0) m = std::max(m, iabs(ivec_dot(u, ti)) / iabs(s0) + 1);
  }
  cand = primitive(ivec_sub(ivec_scaled(t0, m), ti));
  check(directly_across(d, w.normal, t0, cand), ErrorCode::InvariantViolation,
        "no parameter directly across the facet");
  return cand;
}

}  // namespace

CrossingRecord cross_wall(const Dimer& d, const Chamber& c, const WallDescriptor& w) {
  int nv = d.quiver.nv;
  CrossingRecord r;
  r.wall = w;
  r.theta_from = c.interior;
  r.theta_to = lift_parameter(d, far_side_parameter(d, c, w));
  bool base_far = std::binary_search(w.r1.begin(), w.r1.end(), d.v0);

  if (w.type == 1 || w.type == 3) {
    int wi = w.zero_walls.front();
    for (int v = 0; v < nv; ++v) r.degrees.push_back(curve_degree(c.fan, wi, c.cls[size_t(v)]));
    for (size_t k = 1; k < w.zero_walls.size(); ++k)
      for (int v = 0; v < nv; ++v)
        check(curve_degree(c.fan, w.zero_walls[k], c.cls[size_t(v)]) == r.degrees[size_t(v)],
              ErrorCode::InvariantViolation, "fiber curves with different degree tables");
    Int moving = base_far ? Int(-1) : Int(1);
    for (int v = 0; v < nv; ++v)
      check(r.degrees[size_t(v)] == 0 || r.degrees[size_t(v)] == moving,
            ErrorCode::DegreeViolation,
            "class degree on the degenerate curve outside the update rule at vertex " +
                std::to_string(v));
    if (w.type == 1) {
      r.fan_to = flipped_fan(c.fan, wi);
      for (int v = 0; v < nv; ++v)
        r.cls_to.push_back(canonical_class(r.fan_to, c.cls[size_t(v)]));
    } else {
      r.fan_to = c.fan;
      IVec z(c.fan.rays.size(), 0);
      z[size_t(w.contracted_ray)] = 1;
      for (int v = 0; v < nv; ++v) {
        IVec t = c.cls[size_t(v)];
        if (r.degrees[size_t(v)] == moving) t = base_far ? ivec_sub(t, z) : ivec_add(t, z);
        r.cls_to.push_back(canonical_class(c.fan, t));
      }
    }
  } else {
    r.fan_to = c.fan;
    std::vector<IVec> t;
    for (int v = 0; v < nv; ++v) {
      bool in_r2 = std::binary_search(w.r2.begin(), w.r2.end(), v);
      t.push_back(in_r2 ? ivec_sub(c.cls[size_t(v)], w.z_class) : c.cls[size_t(v)]);
    }
    for (int v = 0; v < nv; ++v)
      r.cls_to.push_back(canonical_class(c.fan, ivec_sub(t[size_t(v)], t[size_t(d.v0)])));
  }
  check(ivec_is_zero(r.cls_to[size_t(d.v0)]), ErrorCode::InvariantViolation,
        "base class not normalized after the crossing");
  return r;
}

Chamber verify_crossing(const Dimer& d, CrossingRecord& r) {
  Chamber nb = chamber_of(d, r.theta_to);
  r.verified = same_fan(nb.fan, r.fan_to) && nb.cls == r.cls_to;
  return nb;
}

ChamberGraph explore(const Dimer& d, const IVec& theta, int max_chambers) {
  check(max_chambers >= 1, ErrorCode::InvalidModel, "chamber budget must be positive");
  ChamberGraph g;
  std::map<std::vector<IVec>, int> index;
  g.nodes.push_back(chamber_of(d, theta));
  index[g.nodes.front().facet_normals] = 0;
  std::set<std::tuple<int, int, IVec>> seen;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int i = queue[qi];
    std::vector<IVec> normals = g.nodes[size_t(i)].facet_normals;
    for (const IVec& n : normals) {
      WallDescriptor w = classify_wall(d, g.nodes[size_t(i)], n);
      CrossingRecord rec = cross_wall(d, g.nodes[size_t(i)], w);
      Chamber nb = verify_crossing(d, rec);
      check(rec.verified, ErrorCode::InvariantViolation,
            "wall crossing prediction disagrees with recomputation");
      auto it = index.find(nb.facet_normals);
      int j;
      if (it == index.end()) {
        if (int(g.nodes.size()) >= max_chambers) {
          g.truncated = true;
          continue;
        }
        j = int(g.nodes.size());
        index[nb.facet_normals] = j;
        g.nodes.push_back(std::move(nb));
        queue.push_back(j);
      } else {
        j = it->second;
      }
      auto key = std::make_tuple(std::min(i, j), std::max(i, j), sign_canonical(n));
      if (seen.insert(key).second) {
        g.edges.push_back({i, j, w.type, std::get<2>(key)});
      } else {
        for (const ChamberEdge& e : g.edges)
          if (std::min(e.from, e.to) == std::get<0>(key) &&
              std::max(e.from, e.to) == std::get<1>(key) && e.hyperplane == std::get<2>(key))
            check(e.type == w.type, ErrorCode::InvariantViolation,
                  "wall type disagrees between its two sides");
      }
    }
  }
  return g;
}

ReachabilityReport reachability_report(const Dimer& d, const ChamberGraph& g) {
  check(!g.truncated, ErrorCode::BudgetExceeded,
        "chamber graph is truncated; raise the budget before reporting");
  check(!g.nodes.empty(), ErrorCode::InvalidModel, "empty chamber graph");
  ReachabilityReport rep;
  rep.chambers = int(g.nodes.size());
  rep.edges = int(g.edges.size());
  for (const ChamberEdge& e : g.edges) rep.wall_types[size_t(e.type)] += 1;

  auto all = regular_unimodular_triangulations(g.nodes.front().fan.polygon.poly);
  std::set<std::vector<std::array<int, 3>>> realized;
  for (const Chamber& c : g.nodes) realized.insert(fan_triangulation(c.fan).tris);
  rep.triangulations = int(all.size());
  rep.realized = int(realized.size());
  for (const Triangulation& t : all)
    if (!realized.count(t.tris)) rep.missing.push_back(t.tris);
  rep.all_realized = rep.missing.empty();

  for (const Chamber& c : g.nodes) {
    std::vector<DivisorClass> nef;
    for (const IVec& ray : c.cone.rays)
      nef.push_back(line_bundle(c.fan, c.cls, lift_parameter(d, ray)));
    for (const IVec& l : c.cone.lineality) {
      nef.push_back(line_bundle(c.fan, c.cls, lift_parameter(d, l)));
      nef.push_back(line_bundle(c.fan, c.cls, lift_parameter(d, ivec_neg(l))));
    }
    rep.nef_generators.push_back(std::move(nef));
  }
  return rep;
}

PathCensus path_census(const Dimer& d, int max_len) {
  check(max_len >= 0 && max_len <= 8, ErrorCode::InvalidModel,
        "path length budget out of range (0..8)");
  const Quiver& q = d.quiver;
  Lattice rel = Lattice::from_rows(q.rel, q.na);
  Lattice sat = rel.saturation();

  std::vector<std::vector<int>> out(static_cast<size_t>(q.nv));
  for (int a = 0; a < q.na; ++a) out[size_t(q.src[size_t(a)])].push_back(a);

  PathCensus census;
  census.max_len = max_len;
  for (int s = 0; s < q.nv; ++s) {
    // all arrow paths from s, by exact length
    struct Walk {
      std::vector<int> arrows;
      int end;
    };
    std::vector<std::vector<Walk>> by_len(static_cast<size_t>(max_len) + 1);
    by_len[0].push_back({{}, s});
    for (int len = 1; len <= max_len; ++len)
      for (const Walk& p : by_len[size_t(len - 1)])
        for (int a : out[size_t(p.end)]) {
          Walk n = p;
          n.arrows.push_back(a);
          n.end = q.dst[size_t(a)];
          by_len[size_t(len)].push_back(std::move(n));
        }

    for (int t = 0; t < q.nv; ++t) {
      PathClassCount entry;
      entry.from = s;
      entry.to = t;
      entry.paths.assign(static_cast<size_t>(max_len) + 1, 0);
      entry.classes.assign(static_cast<size_t>(max_len) + 1, 0);
      entry.cumulative.assign(static_cast<size_t>(max_len) + 1, 0);

      std::map<std::vector<int>, int> path_id;
      std::vector<const Walk*> walks;
      std::vector<int> lengths;
      for (int len = 0; len <= max_len; ++len)
        for (const Walk& p : by_len[size_t(len)]) {
          if (p.end != t) continue;
          path_id[p.arrows] = int(walks.size());
          walks.push_back(&p);
          lengths.push_back(len);
          entry.paths[size_t(len)] += 1;
        }

      std::map<IVec, int> class_id;
      std::vector<int> cls_of(walks.size());
      std::vector<int> min_len;
      std::vector<std::set<int>> len_set;
      std::vector<IVec> weight;
      for (size_t i = 0; i < walks.size(); ++i) {
        IVec u = arrow_vec(walks[i]->arrows, q.na);
        IVec key = rel.reduce(u);
        auto it = class_id.find(key);
        if (it == class_id.end()) {
          it = class_id.emplace(key, int(min_len.size())).first;
          min_len.push_back(lengths[i]);
          len_set.emplace_back();
          weight.push_back(sat.reduce(u));
        }
        cls_of[i] = it->second;
        min_len[size_t(it->second)] = std::min(min_len[size_t(it->second)], lengths[i]);
        len_set[size_t(it->second)].insert(lengths[i]);
      }
      for (int len = 0; len <= max_len; ++len) {
        for (size_t ci = 0; ci < min_len.size(); ++ci) {
          if (len_set[ci].count(len)) entry.classes[size_t(len)] += 1;
          if (min_len[ci] <= len) entry.cumulative[size_t(len)] += 1;
        }
      }

      std::map<IVec, int> weight_seen;
      for (const IVec& wkey : weight) {
        if (++weight_seen[wkey] > 1) entry.weights_separate = false;
      }

      // single relation rewrites within the length budget
      UnionFind uf(int(walks.size()));
      for (size_t i = 0; i < walks.size(); ++i) {
        const std::vector<int>& p = walks[i]->arrows;
        for (int a = 0; a < q.na; ++a)
          for (int dir = 0; dir < 2; ++dir) {
            const std::vector<int>& from = dir == 0 ? q.pplus[size_t(a)] : q.pminus[size_t(a)];
            const std::vector<int>& to = dir == 0 ? q.pminus[size_t(a)] : q.pplus[size_t(a)];
            if (from.empty() || from.size() > p.size()) continue;
            for (size_t pos = 0; pos + from.size() <= p.size(); ++pos) {
              if (!std::equal(from.begin(), from.end(), p.begin() + long(pos))) continue;
              std::vector<int> rew(p.begin(), p.begin() + long(pos));
              rew.insert(rew.end(), to.begin(), to.end());
              rew.insert(rew.end(), p.begin() + long(pos + from.size()), p.end());
              if (int(rew.size()) > max_len) continue;
              auto it = path_id.find(rew);
              check(it != path_id.end(), ErrorCode::InvariantViolation,
                    "relation rewrite left the path universe");
              uf.unite(int(i), it->second);
            }
          }
      }
      std::vector<int> root_of_class(min_len.size(), -1);
      for (size_t i = 0; i < walks.size(); ++i) {
        int r = uf.find(int(i));
        int c = cls_of[i];
        if (root_of_class[size_t(c)] < 0)
          root_of_class[size_t(c)] = r;
        else if (root_of_class[size_t(c)] != r)
          entry.rewrite_confluent = false;
      }
      census.pairs.push_back(std::move(entry));
    }
  }
  return census;
}

}  // namespace dimod
