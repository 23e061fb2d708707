#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "dimod/catalog.hpp"
#include "dimod/dimer.hpp"
#include "dimod/errors.hpp"
#include "dimod/moduli.hpp"
#include "dimod/reps.hpp"
#include "doctest.h"
#include "oracle/oracle_geom.hpp"

using namespace dimod;

namespace {

V2 v2(long long a, long long b) { return {Int(a), Int(b)}; }

IVec th(std::vector<long long> xs) {
  IVec t;
  for (long long x : xs) t.push_back(Int(x));
  return t;
}

template <typename F>
std::string thrown_code(F f) {
  try {
    f();
  } catch (const DimodError& e) {
    return code_name(e.code());
  }
  return "none";
}

const std::vector<std::string> kCatalog = {"c3", "conifold", "spp", "c3z3"};

std::vector<IVec> generic_thetas(const std::string& name) {
  if (name == "c3") return {th({0})};
  if (name == "conifold") return {th({1, -1}), th({-1, 1})};
  if (name == "spp")
    return {th({1, 1, -2}), th({-1, -1, 2}), th({2, -1, -1}), th({-2, 1, 1})};
  return {th({2, -1, -1}), th({-1, 2, -1}), th({-1, -1, 2}), th({1, -2, 1})};
}

DimerModel degenerate_model() {
  DimerModel m;
  m.name = "degenerate";
  m.nodes = {{0, Color::Black}, {1, Color::Black}, {2, Color::White}, {3, Color::White}};
  m.edges = {{0, 0, 2, v2(0, 0)},  {1, 0, 2, v2(-1, 0)}, {2, 0, 2, v2(0, -1)},
             {3, 1, 2, v2(0, 0)},  {4, 1, 3, v2(0, 0)},  {5, 1, 3, v2(0, 0)}};
  m.rotation = {{0, 1, 2}, {3, 4, 5}, {0, 3, 1, 2}, {4, 5}};
  return m;
}

std::vector<IVec> ray_classes(const FanModel& f) {
  std::vector<IVec> out;
  for (const auto& r : f.rays) out.push_back(r.nu);
  return out;
}

std::vector<std::array<int, 3>> cone_triples(const FanModel& f) {
  std::vector<std::array<int, 3>> out;
  for (const auto& c : f.cones) out.push_back(c.rays);
  return out;
}

int unique_compact_wall(const FanModel& f) {
  int found = -1;
  for (size_t w = 0; w < f.walls.size(); ++w)
    if (f.walls[w].compact) {
      REQUIRE(found == -1);
      found = int(w);
    }
  REQUIRE(found >= 0);
  return found;
}

}  // namespace

TEST_CASE("conifold: the two chambers give the two diagonals") {
  Dimer d = build_dimer(catalog_model("conifold"));
  FanModel fp = fan(d, th({1, -1}));
  FanModel fm = fan(d, th({-1, 1}));

  std::vector<IVec> rays = {th({0, 0, 1}), th({0, 1, 1}), th({1, 0, 1}),
                            th({1, 1, 1})};
  CHECK(ray_classes(fp) == rays);
  CHECK(ray_classes(fm) == rays);
  CHECK(cone_triples(fp) ==
        std::vector<std::array<int, 3>>{{0, 1, 3}, {0, 2, 3}});
  CHECK(cone_triples(fm) ==
        std::vector<std::array<int, 3>>{{0, 1, 2}, {1, 2, 3}});
  CHECK_FALSE(same_fan(fp, fm));
  CHECK_FALSE(fp.multiplicity_anomaly);

  int wp = unique_compact_wall(fp);
  CHECK(fp.walls[size_t(wp)].rays == std::array<int, 2>{0, 3});
  CHECK(fp.walls[size_t(wp)].a == 1);
  CHECK(fp.walls[size_t(wp)].b == 1);

  // flipping the diagonal lands exactly on the other chamber's fan
  CHECK(same_fan(flipped_fan(fp, wp), fm));
  CHECK(same_fan(flipped_fan(flipped_fan(fp, wp), unique_compact_wall(fm)), fp));

  auto triangulations = regular_unimodular_triangulations(fp.polygon.poly);
  REQUIRE(triangulations.size() == 2);
  CHECK(fan_triangulation(fp).tris != fan_triangulation(fm).tris);
  for (const auto& f : {fp, fm}) {
    bool found = false;
    for (const auto& t : triangulations)
      if (t.tris == fan_triangulation(f).tris) found = true;
    CHECK(found);
  }
}

TEST_CASE("conifold: tautological classes and curve degrees") {
  Dimer d = build_dimer(catalog_model("conifold"));
  IVec tp = th({1, -1});
  FanModel f = fan(d, tp);
  auto cls = tautological_classes(d, f);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0] == th({0, 0, 0, 0}));
  CHECK(cls[1] == th({0, 0, -1, 0}));

  int w = unique_compact_wall(f);
  CHECK(curve_degree(f, w, cls[1]) == -1);
  CHECK(curve_pairing(f, cls, tp, w) == 1);
  CHECK(curve_degree(f, w, line_bundle(f, cls, tp)) == 1);
  // midpoint wall parameter: degree drops to zero
  CHECK(curve_degree(f, w, line_bundle(f, cls, th({0, 0}))) == 0);

  // the opposite chamber carries the opposite degree normalization
  FanModel g = fan(d, th({-1, 1}));
  auto cls2 = tautological_classes(d, g);
  CHECK(cls2[1] == th({0, 0, 0, 1}));
  CHECK(curve_degree(g, unique_compact_wall(g), cls2[1]) == 1);

  // two different arrows out of the base vertex give equivalent classes
  CHECK(classes_equivalent(f, th({1, 0, 0, 0}), th({0, 0, 0, 1})));
  CHECK_FALSE(classes_equivalent(f, th({1, 0, 0, 0}), th({0, 0, 1, 0})));
}

TEST_CASE("one-cone fan has no compact geometry") {
  Dimer d = build_dimer(catalog_model("c3"));
  FanModel f = fan(d, th({0}));
  CHECK(f.rays.size() == 3);
  CHECK(f.cones.size() == 1);
  CHECK(f.walls.size() == 3);
  for (const auto& w : f.walls) CHECK_FALSE(w.compact);
  CHECK(thrown_code([&] { curve_degree(f, 0, th({0, 0, 0})); }) ==
        "NonCompactCurve");
  for (int r = 0; r < 3; ++r) {
    CHECK_FALSE(compact_star_link(f, r).has_value());
    CHECK(thrown_code([&] { surface_chi(f, r, th({0, 0, 0})); }) ==
          "NonCompactDivisor");
  }
  auto cls = tautological_classes(d, f);
  CHECK(cls == std::vector<DivisorClass>{th({0, 0, 0})});
  CHECK(thrown_code([&] { flipped_fan(f, 0); }) == "NonCompactCurve");
}

TEST_CASE("c3z3: projective plane inside the star fan") {
  Dimer d = build_dimer(catalog_model("c3z3"));
  IVec t = th({2, -1, -1});
  FanModel f = fan(d, t);
  CHECK(ray_classes(f) == std::vector<IVec>{th({-1, -1, 1}), th({0, 0, 1}),
                                            th({0, 1, 1}), th({1, 0, 1})});
  CHECK(cone_triples(f) ==
        std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 1, 3}, {1, 2, 3}});

  int interior = ray_by_class(f, th({0, 0, 1}));
  REQUIRE(interior == 1);
  auto link = compact_star_link(f, interior);
  REQUIRE(link.has_value());
  CHECK(link->size() == 3);

  DivisorClass zero(4, Int(0));
  CHECK(surface_chi(f, interior, zero) == std::pair<Int, Int>(1, 1));
  DivisorClass hyper = zero;
  hyper[size_t(link->front())] = 1;
  CHECK(surface_chi(f, interior, hyper) == std::pair<Int, Int>(3, 3));
  CHECK(surface_chi(f, interior, canonical_class(f, hyper)) ==
        std::pair<Int, Int>(3, 3));

  DivisorClass dint = zero;
  dint[size_t(interior)] = 1;
  int compact_count = 0;
  for (size_t w = 0; w < f.walls.size(); ++w)
    if (f.walls[w].compact) {
      ++compact_count;
      CHECK(curve_degree(f, int(w), dint) == -3);
      CHECK(curve_degree(f, int(w), line_bundle(f, tautological_classes(d, f), t)) == 3);
    }
  CHECK(compact_count == 3);

  auto cls = tautological_classes(d, f);
  CHECK(cls == std::vector<DivisorClass>{th({0, 0, 0, 0}), th({0, 0, 0, -2}),
                                         th({0, 0, 0, -1})});
}

TEST_CASE("spp fans across chambers") {
  Dimer d = build_dimer(catalog_model("spp"));
  FanModel f1 = fan(d, th({1, 1, -2}));
  CHECK(ray_classes(f1) ==
        std::vector<IVec>{th({-1, 0, 1}), th({-1, 1, 1}), th({0, 0, 1}),
                          th({0, 1, 1}), th({1, 0, 1})});
  CHECK(cone_triples(f1) ==
        std::vector<std::array<int, 3>>{{0, 1, 3}, {0, 2, 3}, {2, 3, 4}});
  CHECK_FALSE(f1.multiplicity_anomaly);

  // the lattice point (0,0) carries two matchings; each chamber selects one
  CHECK(f1.rays[2].divisor_matching == 0);
  FanModel f2 = fan(d, th({-1, -1, 2}));
  CHECK(f2.rays[2].divisor_matching == 5);

  // wall {(0,0),(0,1)} of the first fan collapses ray 2's divisor direction
  bool saw_b0 = false;
  for (const auto& w : f1.walls)
    if (w.compact && w.rays == std::array<int, 2>{2, 3}) {
      CHECK(w.a == 2);
      CHECK(w.b == 0);
      saw_b0 = true;
    }
  CHECK(saw_b0);

  FanModel f3 = fan(d, th({2, -1, -1}));
  CHECK(cone_triples(f3) ==
        std::vector<std::array<int, 3>>{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  CHECK(fan_triangulation(f1).tris != fan_triangulation(f3).tris);
}

TEST_CASE("fan triangulations are regular and unimodular") {
  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    auto all = regular_unimodular_triangulations(characteristic_polygon(d).poly);
    for (const IVec& t : generic_thetas(name)) {
      FanModel f = fan(d, t);
      Triangulation ft = fan_triangulation(f);
      bool found = false;
      for (const auto& ref : all)
        if (ref.tris == ft.tris) found = true;
      CHECK(found);

      // independent overlap check on the projected triangles
      const auto& pts = f.polygon.poly.points;
      for (size_t i = 0; i < ft.tris.size(); ++i) {
        const auto& a = ft.tris[i];
        CHECK(unimodular_triangle(pts[size_t(a[0])], pts[size_t(a[1])],
                                  pts[size_t(a[2])]));
        for (size_t j = i + 1; j < ft.tris.size(); ++j) {
          const auto& b = ft.tris[j];
          CHECK(oracle::triangle_intersection_area2(
                    pts[size_t(a[0])], pts[size_t(a[1])], pts[size_t(a[2])],
                    pts[size_t(b[0])], pts[size_t(b[1])],
                    pts[size_t(b[2])]) == 0);
        }
      }
    }
  }
}

TEST_CASE("curve pairing identity on a parameter basis") {
  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    for (const IVec& t : generic_thetas(name)) {
      FanModel f = fan(d, t);
      auto cls = tautological_classes(d, f);
      CHECK(cls[size_t(d.v0)] == DivisorClass(f.rays.size(), Int(0)));
      for (int i = 1; i < d.quiver.nv; ++i) {
        IVec basis(size_t(d.quiver.nv), Int(0));
        basis[0] = -1;
        basis[size_t(i)] = 1;
        for (size_t w = 0; w < f.walls.size(); ++w)
          if (f.walls[w].compact)
            CHECK(curve_pairing(f, cls, basis, int(w)) ==
                  curve_degree(f, int(w), line_bundle(f, cls, basis)));
      }
      // chamber parameter: strictly positive on every compact curve
      for (size_t w = 0; w < f.walls.size(); ++w)
        if (f.walls[w].compact) CHECK(curve_pairing(f, cls, t, int(w)) > 0);
    }
  }
}

TEST_CASE("fan input gates") {
  Dimer coni = build_dimer(catalog_model("conifold"));
  CHECK(thrown_code([&] { fan(coni, th({0, 0})); }) == "NonGenericParameter");
  CHECK(thrown_code([&] { fan(coni, th({1, 1})); }) == "InvalidModel");
  Dimer deg = build_dimer(degenerate_model());
  CHECK(thrown_code([&] { fan(deg, th({0, 0, 0})); }) == "DegenerateModel");
  FanModel f = fan(coni, th({1, -1}));
  CHECK(thrown_code([&] { canonical_class(f, th({1, 0, 0})); }) ==
        "InvalidModel");
  CHECK(thrown_code([&] { curve_degree(f, 99, th({0, 0, 0, 0})); }) ==
        "InvalidModel");
}
