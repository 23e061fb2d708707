#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "dimod/catalog.hpp"
#include "dimod/dimer.hpp"
#include "dimod/errors.hpp"
#include "dimod/reps.hpp"
#include "doctest.h"

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

IVec generic_theta(const std::string& name) {
  if (name == "c3") return th({0});
  if (name == "conifold") return th({1, -1});
  if (name == "spp") return th({1, 1, -2});
  return th({2, -1, -1});  // c3z3
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

// The pattern is admissible exactly when the all-ones assignment off the zero
// set satisfies every relation; evaluate the two path products directly.
bool admissible_by_evaluation(const Dimer& d, unsigned mask) {
  auto value = [&](const std::vector<int>& path) {
    int v = 1;
    for (int b : path)
      if (mask >> b & 1) v = 0;
    return v;
  };
  for (int a = 0; a < d.quiver.na; ++a)
    if (value(d.quiver.pplus[a]) != value(d.quiver.pminus[a])) return false;
  return true;
}

}  // namespace

TEST_CASE("admissible patterns match direct relation evaluation") {
  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    std::vector<Pattern> expect;
    for (unsigned m = 0; m < (1u << d.quiver.na); ++m) {
      if (!admissible_by_evaluation(d, m)) continue;
      Pattern z;
      for (int a = 0; a < d.quiver.na; ++a)
        if (m >> a & 1) z.push_back(a);
      expect.push_back(z);
    }
    std::sort(expect.begin(), expect.end());
    CHECK(admissible_patterns(d) == expect);
  }
}

TEST_CASE("admissible pattern counts") {
  CHECK(admissible_patterns(build_dimer(catalog_model("c3"))).size() == 8);
  CHECK(admissible_patterns(build_dimer(catalog_model("conifold"))).size() == 16);
  CHECK(admissible_patterns(build_dimer(catalog_model("spp"))).size() == 44);
  CHECK(admissible_patterns(build_dimer(catalog_model("c3z3"))).size() == 50);
}

TEST_CASE("matchings induce admissible patterns") {
  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    CHECK(admissible(d, {}));
    for (const auto& match : d.matchings) CHECK(admissible(d, match));
  }
}

TEST_CASE("closed supports: worked examples") {
  Dimer coni = build_dimer(catalog_model("conifold"));
  CHECK(closed_supports(coni, {}).empty());
  CHECK(closed_supports(coni, {0, 1, 2, 3}) ==
        std::vector<std::vector<int>>{{0}, {1}});
  CHECK(closed_supports(coni, {1, 3}) == std::vector<std::vector<int>>{{1}});

  Dimer c3 = build_dimer(catalog_model("c3"));
  CHECK(closed_supports(c3, {0, 1, 2}).empty());

  Dimer z3 = build_dimer(catalog_model("c3z3"));
  CHECK(closed_supports(z3, {0, 1, 2, 3, 4, 5, 6, 7, 8}) ==
        std::vector<std::vector<int>>{{0}, {0, 1}, {0, 2}, {1}, {1, 2}, {2}});

  Dimer spp = build_dimer(catalog_model("spp"));
  CHECK(thrown_code([&] { closed_supports(spp, {0}); }) == "InadmissiblePattern");
  CHECK(thrown_code([&] { closed_supports(coni, {2, 1}); }) == "InvalidModel");
  CHECK(thrown_code([&] { closed_supports(coni, {9}); }) == "InvalidModel");
}

TEST_CASE("conifold stability at both generic parameters") {
  Dimer d = build_dimer(catalog_model("conifold"));
  IVec tp = th({1, -1}), tm = th({-1, 1});

  CHECK(is_stable(d, {0, 2}, tp));
  CHECK_FALSE(is_stable(d, {1, 3}, tp));
  CHECK_FALSE(is_semistable(d, {1, 3}, tp));
  CHECK(is_stable(d, {1, 3}, tm));
  CHECK(stable_patterns(d, tp).size() == 12);
  CHECK(stable_patterns(d, tm).size() == 12);

  // stable exactly when the pattern does not contain both arrows into v0
  for (const auto& z : admissible_patterns(d)) {
    bool kills = std::binary_search(z.begin(), z.end(), 1) &&
                 std::binary_search(z.begin(), z.end(), 3);
    CHECK(is_stable(d, z, tp) == !kills);
  }

  CHECK(support_census(d, tp) == std::vector<std::vector<int>>{{0}});
  CHECK(support_census(d, tm) == std::vector<std::vector<int>>{{1}});
  CHECK(fixed_points(d, tp) == std::vector<Pattern>{{0, 1, 2}, {0, 2, 3}});
  CHECK(fixed_points(d, tm) == std::vector<Pattern>{{0, 1, 3}, {1, 2, 3}});
}

TEST_CASE("one-vertex quiver: every pattern stable, census empty") {
  Dimer d = build_dimer(catalog_model("c3"));
  IVec t0 = th({0});
  CHECK(strongly_generic(d, t0));
  CHECK(stable_patterns(d, t0).size() == 8);
  CHECK(support_census(d, t0).empty());
  CHECK(fixed_points(d, t0) == std::vector<Pattern>{{0, 1, 2}});
}

TEST_CASE("spp stability census") {
  Dimer d = build_dimer(catalog_model("spp"));
  IVec t = th({1, 1, -2});
  CHECK(stable_patterns(d, t).size() == 16);
  CHECK(support_census(d, t) ==
        std::vector<std::vector<int>>{{0}, {0, 1}, {1}});
  CHECK(fixed_points(d, t) ==
        std::vector<Pattern>{{0, 1, 2, 3, 4}, {0, 1, 2, 4, 5}, {1, 2, 3, 4, 6}});
}

TEST_CASE("c3z3 stability census") {
  Dimer d = build_dimer(catalog_model("c3z3"));
  IVec t = th({2, -1, -1});
  CHECK(stable_patterns(d, t).size() == 14);
  CHECK(support_census(d, t) == std::vector<std::vector<int>>{{0}, {0, 2}});
  CHECK(fixed_points(d, t) ==
        std::vector<Pattern>{{0, 1, 2, 3, 4, 5, 6},
                             {0, 1, 2, 3, 4, 7, 8},
                             {0, 1, 2, 5, 6, 7, 8}});
}

TEST_CASE("census entries pair positively and come from stable supports") {
  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    IVec t = generic_theta(name);
    for (const auto& r : support_census(d, t)) {
      Int s = 0;
      for (int v : r) s += t[size_t(v)];
      CHECK(s > 0);
    }
  }
}

TEST_CASE("fixed point count equals the normalized polygon area") {
  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    CharPolygon cp = characteristic_polygon(d);
    CHECK(Int(fixed_points(d, generic_theta(name)).size()) == cp.poly.area2);
  }
}

TEST_CASE("orbit dimensions") {
  Dimer coni = build_dimer(catalog_model("conifold"));
  CHECK(orbit_dim(coni, {}) == 3);
  CHECK(orbit_dim(coni, {0}) == 2);
  CHECK(orbit_dim(coni, {0, 2}) == 1);
  CHECK(orbit_dim(coni, {0, 1, 2}) == 0);
  CHECK(orbit_dim(coni, {0, 1, 2, 3}) == 0);

  Dimer c3 = build_dimer(catalog_model("c3"));
  CHECK(orbit_dim(c3, {}) == 3);
  CHECK(orbit_dim(c3, {0}) == 2);
  CHECK(orbit_dim(c3, {0, 1}) == 1);
  CHECK(orbit_dim(c3, {0, 1, 2}) == 0);

  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    CHECK(orbit_dim(d, {}) == 3);
    // a matching pattern cuts the orbit down to the two-torus of its divisor
    for (const auto& match : d.matchings) CHECK(orbit_dim(d, match) == 2);
  }
}

TEST_CASE("weight lattice ranks and the height change of basis") {
  auto ranks = [](const std::string& name) {
    WeightLattice w = weight_lattice(build_dimer(catalog_model(name)));
    return std::pair<int, int>(w.K.rows, w.rel_rank);
  };
  CHECK(ranks("c3") == std::pair<int, int>(3, 0));
  CHECK(ranks("conifold") == std::pair<int, int>(3, 0));
  CHECK(ranks("spp") == std::pair<int, int>(5, 2));
  CHECK(ranks("c3z3") == std::pair<int, int>(7, 4));

  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    WeightLattice w = weight_lattice(d);
    for (size_t i = 0; i < d.matchings.size(); ++i) {
      CHECK(w.height[i][0] == d.matching_class[i][0]);
      CHECK(w.height[i][1] == d.matching_class[i][1]);
      CHECK(w.height[i][2] == 1);
      CHECK(w.T.mul_vec(w.nu[i]) == w.height[i]);
    }
    for (int v = 0; v < d.quiver.nv; ++v) {
      IVec u = arrow_vec(d.quiver.small_cycle[size_t(v)], d.quiver.na);
      CHECK(w.cycle_class_height(u) == th({0, 0, 1}));
    }
  }
}

TEST_CASE("cycle pairing counts matched arrows") {
  for (const auto& name : kCatalog) {
    CAPTURE(name);
    Dimer d = build_dimer(catalog_model(name));
    WeightLattice w = weight_lattice(d);
    for (int v = 0; v < d.quiver.nv; ++v) {
      const auto& cyc = d.quiver.small_cycle[size_t(v)];
      IVec c = w.cycle_class_height(arrow_vec(cyc, d.quiver.na));
      for (size_t i = 0; i < d.matchings.size(); ++i)
        CHECK(ivec_dot(w.height[i], c) == matching_count(cyc, d.matchings[i]));
    }
  }
}

TEST_CASE("conifold two-arrow cycle class") {
  Dimer d = build_dimer(catalog_model("conifold"));
  WeightLattice w = weight_lattice(d);
  CHECK(w.cycle_class_height(arrow_vec({0, 1}, 4)) == th({0, -1, 1}));
  CHECK(w.cycle_class_height(arrow_vec({2, 3}, 4)) == th({0, 1, 0}));
  std::vector<int> c = {0, 1};
  for (size_t i = 0; i < d.matchings.size(); ++i)
    CHECK(ivec_dot(w.height[i], th({0, -1, 1})) ==
          matching_count(c, d.matchings[i]));
}

TEST_CASE("parameter validation and genericity") {
  Dimer coni = build_dimer(catalog_model("conifold"));
  CHECK(strongly_generic(coni, th({1, -1})));
  CHECK_FALSE(strongly_generic(coni, th({0, 0})));
  CHECK(thrown_code([&] { require_strongly_generic(coni, th({0, 0})); }) ==
        "NonGenericParameter");
  CHECK(thrown_code([&] { stable_patterns(coni, th({0, 0})); }) ==
        "NonGenericParameter");
  CHECK(thrown_code([&] { support_census(coni, th({0, 0})); }) ==
        "NonGenericParameter");
  CHECK(thrown_code([&] { check_theta(coni, th({1, -1, 0})); }) == "InvalidModel");
  CHECK(thrown_code([&] { check_theta(coni, th({1, 1})); }) == "InvalidModel");

  Dimer z3 = build_dimer(catalog_model("c3z3"));
  CHECK_FALSE(strongly_generic(z3, th({1, -1, 0})));
  CHECK(thrown_code([&] { fixed_points(z3, th({1, -1, 0})); }) ==
        "NonGenericParameter");

  // stability itself stays defined on walls
  CHECK(is_stable(coni, {}, th({0, 0})));
  CHECK(is_semistable(coni, {0, 1, 2, 3}, th({0, 0})));
  CHECK_FALSE(is_stable(coni, {0, 1, 2, 3}, th({0, 0})));
}

TEST_CASE("weight lattice refuses degenerate models") {
  Dimer d = build_dimer(degenerate_model());
  CHECK(thrown_code([&] { weight_lattice(d); }) == "DegenerateModel");
}
