#include "dimod/dimer.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <queue>

#include "dimod/intmat.hpp"

namespace dimod {

namespace {

int head_node(const DimerModel& m, int d) {
  const DimerEdge& e = m.edges[size_t(d >> 1)];
  return (d & 1) ? e.white : e.black;
}

std::vector<std::map<int, int>> rotation_pos(const DimerModel& m) {
  std::vector<std::map<int, int>> pos(m.nodes.size());
  for (size_t v = 0; v < m.rotation.size(); ++v)
    for (size_t i = 0; i < m.rotation[v].size(); ++i)
      pos[v][m.rotation[v][i]] = int(i);
  return pos;
}

// Step of the ccw face walk: at the head node, turn to the previous edge in
// its ccw order and leave along that edge.
int next_dart(const DimerModel& m, const std::vector<std::map<int, int>>& pos, int d) {
  int e = d >> 1;
  int h = head_node(m, d);
  const std::vector<int>& rot = m.rotation[size_t(h)];
  int k = int(rot.size());
  int i = pos[size_t(h)].at(e);
  int ep = rot[size_t((i - 1 + k) % k)];
  return (d & 1) ? 2 * ep : 2 * ep + 1;  // outgoing dart at a white resp. black node
}

void validate_structure(const DimerModel& m) {
  check(!m.nodes.empty() && !m.edges.empty(), ErrorCode::InvalidModel, "empty model");
  for (size_t i = 0; i < m.nodes.size(); ++i)
    check(m.nodes[i].id == int(i), ErrorCode::InvalidModel, "node ids must be 0..n-1 in order");
  for (size_t i = 0; i < m.edges.size(); ++i) {
    const DimerEdge& e = m.edges[i];
    check(e.id == int(i), ErrorCode::InvalidModel, "edge ids must be 0..m-1 in order");
    check(e.black >= 0 && e.black < int(m.nodes.size()) && e.white >= 0 &&
              e.white < int(m.nodes.size()),
          ErrorCode::InvalidModel, "edge " + std::to_string(e.id) + ": endpoint out of range");
  }
  check(m.rotation.size() == m.nodes.size(), ErrorCode::InvalidModel,
        "rotation must list every node");

  for (const DimerEdge& e : m.edges) {
    check(m.nodes[size_t(e.black)].color == Color::Black, ErrorCode::NotBipartite,
          "edge " + std::to_string(e.id) + ": black endpoint is not a black node");
    check(m.nodes[size_t(e.white)].color == Color::White, ErrorCode::NotBipartite,
          "edge " + std::to_string(e.id) + ": white endpoint is not a white node");
  }

  std::vector<std::vector<int>> inc(m.nodes.size());
  for (const DimerEdge& e : m.edges) {
    inc[size_t(e.black)].push_back(e.id);
    inc[size_t(e.white)].push_back(e.id);
  }
  for (size_t v = 0; v < inc.size(); ++v)
    check(inc[v].size() >= 2, ErrorCode::UnivalentNode,
          "node " + std::to_string(int(v)) + " has fewer than two incident edges");

  for (size_t v = 0; v < inc.size(); ++v) {
    std::vector<int> a = inc[v], b = m.rotation[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    check(a == b, ErrorCode::InvalidModel,
          "rotation at node " + std::to_string(int(v)) +
              " is not a permutation of its incident edges");
  }

  std::vector<char> seen(m.nodes.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : inc[size_t(v)]) {
      int o = m.edges[size_t(e)].black == v ? m.edges[size_t(e)].white : m.edges[size_t(e)].black;
      if (!seen[size_t(o)]) {
        seen[size_t(o)] = 1;
        ++reached;
        q.push(o);
      }
    }
  }
  check(reached == m.nodes.size(), ErrorCode::Disconnected, "graph is disconnected");
}

void trace_faces(Dimer& D) {
  const DimerModel& m = D.model;
  auto pos = rotation_pos(m);
  int nd = 2 * int(m.edges.size());
  D.dart_face.assign(size_t(nd), -1);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (D.dart_face[size_t(d0)] >= 0) continue;
    Face f;
    f.id = int(D.faces.size());
    int d = d0;
    do {
      check(D.dart_face[size_t(d)] < 0, ErrorCode::InvariantViolation, "face walk crossed itself");
      D.dart_face[size_t(d)] = f.id;
      f.darts.push_back(d);
      d = next_dart(m, pos, d);
    } while (d != d0);
    D.faces.push_back(std::move(f));
  }

  long long euler =
      (long long)m.nodes.size() - (long long)m.edges.size() + (long long)D.faces.size();
  check(euler == 0, ErrorCode::NotTorusCellular,
        "cell complex has Euler characteristic " + std::to_string(euler) + ", expected 0");

  for (const Face& f : D.faces) {
    V2 w{Int(0), Int(0)};
    for (int d : f.darts) {
      const DimerEdge& e = m.edges[size_t(d >> 1)];
      Int s = (d & 1) ? 1 : -1;
      w[0] += s * e.winding[0];
      w[1] += s * e.winding[1];
    }
    check(w[0] == 0 && w[1] == 0, ErrorCode::NotTorusCellular,
          "face " + std::to_string(f.id) + " has nonzero winding " + w[0].str() + "," + w[1].str());
  }

  // windings of graph cycles must generate the full period lattice
  std::vector<char> vis(m.nodes.size(), 0);
  std::vector<V2> phi(m.nodes.size(), V2{Int(0), Int(0)});
  std::vector<char> tree(m.edges.size(), 0);
  std::queue<int> q;
  vis[0] = 1;
  q.push(0);
  std::vector<std::vector<int>> inc(m.nodes.size());
  for (const DimerEdge& e : m.edges) {
    inc[size_t(e.black)].push_back(e.id);
    inc[size_t(e.white)].push_back(e.id);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int ei : inc[size_t(v)]) {
      const DimerEdge& e = m.edges[size_t(ei)];
      int o = e.black == v ? e.white : e.black;
      if (vis[size_t(o)]) continue;
      vis[size_t(o)] = 1;
      tree[size_t(ei)] = 1;
      Int s = e.black == v ? 1 : -1;  // phi(white) - phi(black) = winding on tree edges
      phi[size_t(o)][0] = phi[size_t(v)][0] + s * e.winding[0];
      phi[size_t(o)][1] = phi[size_t(v)][1] + s * e.winding[1];
      q.push(o);
    }
  }
  std::vector<IVec> cyc;
  for (const DimerEdge& e : m.edges) {
    if (tree[size_t(e.id)]) continue;
    IVec c{e.winding[0] - (phi[size_t(e.white)][0] - phi[size_t(e.black)][0]),
           e.winding[1] - (phi[size_t(e.white)][1] - phi[size_t(e.black)][1])};
    if (!ivec_is_zero(c)) cyc.push_back(c);
  }
  Lattice lat = Lattice::from_rows(cyc, 2);
  check(lat.contains({Int(1), Int(0)}) && lat.contains({Int(0), Int(1)}),
        ErrorCode::NotTorusCellular, "cycle windings do not generate the period lattice");
}

void build_quiver(Dimer& D) {
  const DimerModel& m = D.model;
  Quiver& Q = D.quiver;
  Q.nv = int(D.faces.size());
  Q.na = int(m.edges.size());
  Q.src.resize(size_t(Q.na));
  Q.dst.resize(size_t(Q.na));
  for (int a = 0; a < Q.na; ++a) {
    Q.src[size_t(a)] = D.dart_face[size_t(2 * a)];
    Q.dst[size_t(a)] = D.dart_face[size_t(2 * a + 1)];
  }

  auto pos = rotation_pos(m);
  Q.pplus.resize(size_t(Q.na));
  Q.pminus.resize(size_t(Q.na));
  for (int a = 0; a < Q.na; ++a) {
    const DimerEdge& e = m.edges[size_t(a)];
    const std::vector<int>& rw = m.rotation[size_t(e.white)];
    int kw = int(rw.size()), iw = pos[size_t(e.white)].at(a);
    for (int j = 1; j < kw; ++j) Q.pplus[size_t(a)].push_back(rw[size_t((iw - j + kw) % kw)]);
    const std::vector<int>& rb = m.rotation[size_t(e.black)];
    int kb = int(rb.size()), ib = pos[size_t(e.black)].at(a);
    for (int j = 1; j < kb; ++j) Q.pminus[size_t(a)].push_back(rb[size_t((ib + j) % kb)]);

    for (const std::vector<int>* p : {&Q.pplus[size_t(a)], &Q.pminus[size_t(a)]}) {
      int at = Q.dst[size_t(a)];
      for (int b : *p) {
        check(Q.src[size_t(b)] == at, ErrorCode::InvariantViolation,
              "return path does not compose");
        at = Q.dst[size_t(b)];
      }
      check(at == Q.src[size_t(a)], ErrorCode::InvariantViolation, "return path does not close");
    }

    IVec r(size_t(Q.na), Int(0));
    for (int b : Q.pplus[size_t(a)]) r[size_t(b)] += 1;
    for (int b : Q.pminus[size_t(a)]) r[size_t(b)] -= 1;
    Q.rel.push_back(std::move(r));
  }

  Q.small_cycle.assign(size_t(Q.nv), {});
  std::vector<char> have(size_t(Q.nv), 0);
  for (int a = 0; a < Q.na; ++a) {
    int v = Q.src[size_t(a)];
    if (have[size_t(v)]) continue;
    have[size_t(v)] = 1;
    Q.small_cycle[size_t(v)].push_back(a);
    for (int b : Q.pplus[size_t(a)]) Q.small_cycle[size_t(v)].push_back(b);
  }
  for (int v = 0; v < Q.nv; ++v)
    check(have[size_t(v)] != 0, ErrorCode::InvariantViolation, "face with no outgoing arrow");
}

void enumerate_matchings(Dimer& D) {
  const DimerModel& m = D.model;
  int n = int(m.nodes.size());
  std::vector<std::vector<int>> inc(static_cast<size_t>(n));
  for (const DimerEdge& e : m.edges) {
    inc[size_t(e.black)].push_back(e.id);
    inc[size_t(e.white)].push_back(e.id);
  }
  std::vector<char> covered(size_t(n), 0);
  std::vector<int> cur;

  // branch on an uncovered node with the fewest usable edges
  std::function<void()> go = [&]() {
    int best = -1, bestc = INT_MAX;
    for (int v = 0; v < n; ++v) {
      if (covered[size_t(v)]) continue;
      int c = 0;
      for (int ei : inc[size_t(v)]) {
        const DimerEdge& e = m.edges[size_t(ei)];
        if (!covered[size_t(e.black)] && !covered[size_t(e.white)]) ++c;
      }
      if (c < bestc) {
        bestc = c;
        best = v;
      }
    }
    if (best < 0) {
      std::vector<int> s = cur;
      std::sort(s.begin(), s.end());
      D.matchings.push_back(std::move(s));
      return;
    }
    if (bestc == 0) return;
    for (int ei : inc[size_t(best)]) {
      const DimerEdge& e = m.edges[size_t(ei)];
      if (covered[size_t(e.black)] || covered[size_t(e.white)]) continue;
      covered[size_t(e.black)] = covered[size_t(e.white)] = 1;
      cur.push_back(ei);
      go();
      cur.pop_back();
      covered[size_t(e.black)] = covered[size_t(e.white)] = 0;
    }
  };
  go();
  check(!D.matchings.empty(), ErrorCode::NoPerfectMatching, "model admits no perfect matching");
  std::sort(D.matchings.begin(), D.matchings.end());
  check(std::adjacent_find(D.matchings.begin(), D.matchings.end()) == D.matchings.end(),
        ErrorCode::InvariantViolation, "duplicate matching");
  D.ref_matching = 0;

  const std::vector<int>& ref = D.matchings[0];
  V2 base{Int(0), Int(0)};
  for (int e : ref) {
    base[0] += m.edges[size_t(e)].winding[0];
    base[1] += m.edges[size_t(e)].winding[1];
  }
  for (const std::vector<int>& d : D.matchings) {
    V2 c{-base[0], -base[1]};
    for (int e : d) {
      c[0] += m.edges[size_t(e)].winding[0];
      c[1] += m.edges[size_t(e)].winding[1];
    }
    D.matching_class.push_back(c);
  }

  std::vector<char> used(m.edges.size(), 0);
  for (const std::vector<int>& d : D.matchings)
    for (int e : d) used[size_t(e)] = 1;
  D.non_degenerate = std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

void assert_matching_identities(const Dimer& D) {
  const Quiver& Q = D.quiver;
  for (const std::vector<int>& d : D.matchings) {
    for (int a = 0; a < Q.na; ++a) {
      int in = std::binary_search(d.begin(), d.end(), a) ? 1 : 0;
      check(matching_count(Q.pplus[size_t(a)], d) == 1 - in, ErrorCode::InvariantViolation,
            "white return path meets a matching the wrong number of times");
      check(matching_count(Q.pminus[size_t(a)], d) == 1 - in, ErrorCode::InvariantViolation,
            "black return path meets a matching the wrong number of times");
    }
    for (int v = 0; v < Q.nv; ++v)
      check(matching_count(Q.small_cycle[size_t(v)], d) == 1, ErrorCode::InvariantViolation,
            "small cycle must meet every matching exactly once");
  }
}

}  // namespace

int matching_count(const std::vector<int>& arrows, const std::vector<int>& match) {
  int c = 0;
  for (int a : arrows)
    if (std::binary_search(match.begin(), match.end(), a)) ++c;
  return c;
}

Dimer build_dimer(const DimerModel& m) {
  validate_structure(m);
  Dimer D;
  D.model = m;
  trace_faces(D);
  build_quiver(D);
  enumerate_matchings(D);
  assert_matching_identities(D);
  if (m.v0) {
    check(*m.v0 >= 0 && *m.v0 < int(D.faces.size()), ErrorCode::InvalidModel,
          "v0 face out of range");
    D.v0 = *m.v0;
  } else {
    D.v0 = 0;
  }
  return D;
}

CharPolygon characteristic_polygon(const Dimer& d) {
  check(d.non_degenerate, ErrorCode::DegenerateModel,
        "edge in no perfect matching; moduli are not defined for this model");
  CharPolygon cp;
  cp.poly = polygon_from_points(d.matching_class);
  cp.multiplicity.assign(cp.poly.points.size(), 0);
  for (const V2& c : d.matching_class) {
    auto it = std::find(cp.poly.points.begin(), cp.poly.points.end(), c);
    check(it != cp.poly.points.end(), ErrorCode::InvariantViolation,
          "matching class outside its polygon");
    cp.multiplicity[size_t(it - cp.poly.points.begin())] += 1;
  }
  return cp;
}

}  // namespace dimod
