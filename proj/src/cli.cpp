#include "dimod/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "dimod/catalog.hpp"
#include "dimod/chambers.hpp"
#include "dimod/errors.hpp"
#include "dimod/io.hpp"
#include "dimod/moduli.hpp"
#include "dimod/triang.hpp"
#include "dimod/wallcross.hpp"
#include "json.hpp"

namespace dimod {

namespace {

using nlohmann::json;

json jvec(const IVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_ll(x));
  return a;
}

json jv2(const V2& p) { return json::array({to_ll(p[0]), to_ll(p[1])}); }

json jvecs(const std::vector<IVec>& vs) {
  json a = json::array();
  for (const IVec& v : vs) a.push_back(jvec(v));
  return a;
}

const char* type_label(int t) {
  switch (t) {
    case 0: return "0";
    case 1: return "I";
    case 2: return "II";
    case 3: return "III";
  }
  fail(ErrorCode::Unreachable, "wall type out of range");
}

IVec parse_int_list(const std::string& s) {
  IVec out;
  check(!s.empty(), ErrorCode::InvalidModel, "empty integer list");
  size_t pos = 0;
  while (true) {
    size_t comma = s.find(',', pos);
    std::string tok =
        comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    bool ok = !tok.empty();
    long long v = 0;
    if (ok) {
      try {
        size_t used = 0;
        v = std::stoll(tok, &used);
        ok = used == tok.size();
      } catch (...) {
        ok = false;
      }
    }
    check(ok, ErrorCode::InvalidModel, "not an integer: '" + tok + "'");
    out.push_back(Int(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json polygon_json(const CharPolygon& p) {
  json j;
  j["area2"] = to_ll(p.poly.area2);
  j["hull"] = json::array();
  for (const V2& v : p.poly.hull) j["hull"].push_back(jv2(v));
  j["points"] = json::array();
  for (const V2& v : p.poly.points) j["points"].push_back(jv2(v));
  j["multiplicity"] = p.multiplicity;
  return j;
}

json fan_json(const FanModel& f) {
  json j;
  j["rays"] = json::array();
  for (const FanRay& r : f.rays)
    j["rays"].push_back({{"nu", jvec(r.nu)},
                         {"matchings", r.matchings},
                         {"divisor_matching", r.divisor_matching}});
  j["cones"] = json::array();
  for (const FanCone& c : f.cones) j["cones"].push_back(c.rays);
  j["walls"] = json::array();
  for (const FanWall& w : f.walls)
    j["walls"].push_back({{"rays", w.rays},
                          {"compact", w.compact},
                          {"a", to_ll(w.a)},
                          {"b", to_ll(w.b)}});
  j["multiplicity_anomaly"] = f.multiplicity_anomaly;
  return j;
}

json wall_json(const WallDescriptor& w) {
  json j;
  j["normal"] = jvec(w.normal);
  j["r1"] = w.r1;
  j["r2"] = w.r2;
  j["theta0"] = jvec(w.theta0);
  j["type"] = type_label(w.type);
  j["rigid_sub"] = w.rigid_sub;
  j["rigid_quot"] = w.rigid_quot;
  j["r1_connected"] = w.r1_connected;
  j["r2_connected"] = w.r2_connected;
  j["boundary_components"] = w.boundary_components;
  j["strict_ss"] = json(w.strict_ss);
  j["z_dim"] = w.z_dim;
  j["z_class"] = jvec(w.z_class);
  j["contracted_ray"] = w.contracted_ray;
  j["zero_walls"] = w.zero_walls;
  return j;
}

json chamber_json(const Chamber& c) {
  json j;
  j["theta"] = jvec(c.seed);
  j["interior"] = jvec(c.interior);
  j["census"] = json(c.census);
  j["facets"] = jvecs(c.facet_normals);
  j["cone"] = {{"rays", jvecs(c.cone.rays)}, {"lineality", jvecs(c.cone.lineality)}};
  j["stable_count"] = int(c.stable.size());
  j["fan"] = fan_json(c.fan);
  j["triangulation"] = json(fan_triangulation(c.fan).tris);
  j["classes"] = jvecs(c.cls);
  return j;
}

json report_validate(const Dimer& d) {
  json j;
  j["name"] = d.model.name;
  j["nodes"] = int(d.model.nodes.size());
  j["edges"] = int(d.model.edges.size());
  j["faces"] = int(d.faces.size());
  j["base_face"] = d.v0;
  j["non_degenerate"] = d.non_degenerate;
  j["valid"] = true;
  return j;
}

json report_quiver(const Dimer& d) {
  const Quiver& q = d.quiver;
  json j;
  j["vertices"] = q.nv;
  j["base_vertex"] = d.v0;
  j["arrows"] = json::array();
  for (int a = 0; a < q.na; ++a)
    j["arrows"].push_back({{"id", a}, {"src", q.src[size_t(a)]}, {"dst", q.dst[size_t(a)]}});
  j["relations"] = json::array();
  for (int a = 0; a < q.na; ++a)
    j["relations"].push_back(
        {{"arrow", a}, {"plus", q.pplus[size_t(a)]}, {"minus", q.pminus[size_t(a)]}});
  return j;
}

json report_matchings(const Dimer& d) {
  json j;
  j["count"] = int(d.matchings.size());
  j["reference"] = d.ref_matching;
  j["matchings"] = json(d.matchings);
  j["classes"] = json::array();
  for (const V2& h : d.matching_class) j["classes"].push_back(jv2(h));
  return j;
}

json report_polygon(const Dimer& d) {
  CharPolygon p = characteristic_polygon(d);
  json j = polygon_json(p);
  j["triangulations"] = int(regular_unimodular_triangulations(p.poly).size());
  return j;
}

json report_fan(const Dimer& d, const IVec& theta) {
  FanModel f = fan(d, theta);
  json j;
  j["theta"] = jvec(theta);
  j["fan"] = fan_json(f);
  j["triangulation"] = json(fan_triangulation(f).tris);
  j["classes"] = jvecs(tautological_classes(d, f));
  return j;
}

json report_chamber(const Dimer& d, const IVec& theta) {
  return chamber_json(chamber_of(d, theta));
}

json report_walls(const Dimer& d, const IVec& theta) {
  Chamber c = chamber_of(d, theta);
  json j;
  j["theta"] = jvec(theta);
  j["interior"] = jvec(c.interior);
  j["walls"] = json::array();
  for (const WallDescriptor& w : facets(d, c)) j["walls"].push_back(wall_json(w));
  return j;
}

json report_cross(const Dimer& d, const IVec& theta, int facet) {
  Chamber c = chamber_of(d, theta);
  check(facet >= 0 && facet < int(c.facet_normals.size()), ErrorCode::InvalidModel,
        "facet index out of range");
  WallDescriptor w = classify_wall(d, c, c.facet_normals[size_t(facet)]);
  CrossingRecord r = cross_wall(d, c, w);
  verify_crossing(d, r);
  json j;
  j["facet"] = facet;
  j["wall"] = wall_json(w);
  j["theta_from"] = jvec(r.theta_from);
  j["theta_to"] = jvec(r.theta_to);
  j["degrees"] = jvec(r.degrees);
  j["fan_to"] = fan_json(r.fan_to);
  j["classes_to"] = jvecs(r.cls_to);
  j["verified"] = r.verified;
  return j;
}

std::string tri_hash(const std::vector<std::array<int, 3>>& tris) {
  unsigned long long h = 1469598103934665603ull;
  for (const auto& t : tris)
    for (int x : t) {
      h ^= static_cast<unsigned long long>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

json graph_json(const ChamberGraph& g) {
  json j;
  j["truncated"] = g.truncated;
  j["nodes"] = json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    json n = chamber_json(g.nodes[i]);
    n["index"] = int(i);
    j["nodes"].push_back(n);
  }
  j["edges"] = json::array();
  for (const ChamberEdge& e : g.edges)
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"type", type_label(e.type)},
                          {"hyperplane", jvec(e.hyperplane)}});
  return j;
}

std::string graph_dot(const ChamberGraph& g) {
  std::ostringstream ss;
  ss << "graph chambers {\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    ss << "  n" << i << " [label=\"" << tri_hash(fan_triangulation(g.nodes[i].fan).tris)
       << "\"];\n";
  for (const ChamberEdge& e : g.edges)
    ss << "  n" << e.from << " -- n" << e.to << " [label=\"" << type_label(e.type)
       << "\"];\n";
  ss << "}\n";
  return ss.str();
}

json report_report(const Dimer& d, const IVec& theta, int budget) {
  ChamberGraph g = explore(d, theta, budget);
  ReachabilityReport rr = reachability_report(d, g);
  for (const Chamber& c : g.nodes) chamber_from_geometry(d, c);
  json j;
  j["chambers"] = rr.chambers;
  j["edges"] = rr.edges;
  j["wall_types"] = {{"0", rr.wall_types[0]},
                     {"I", rr.wall_types[1]},
                     {"II", rr.wall_types[2]},
                     {"III", rr.wall_types[3]}};
  j["triangulations"] = rr.triangulations;
  j["realized"] = rr.realized;
  j["all_realized"] = rr.all_realized;
  j["missing"] = json(rr.missing);
  j["nef"] = json::array();
  for (const auto& n : rr.nef_generators) j["nef"].push_back(jvecs(n));
  // chamber_from_geometry above throws GeometryMismatch otherwise
  j["geometry_match"] = true;
  return j;
}

json report_paths(const Dimer& d, int max_len) {
  PathCensus pc = path_census(d, max_len);
  json j;
  j["max_len"] = pc.max_len;
  j["pairs"] = json::array();
  for (const PathClassCount& p : pc.pairs)
    j["pairs"].push_back({{"from", p.from},
                          {"to", p.to},
                          {"paths", p.paths},
                          {"classes", p.classes},
                          {"cumulative", p.cumulative},
                          {"rewrite_confluent", p.rewrite_confluent},
                          {"weights_separate", p.weights_separate}});
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream f(path);
  check(bool(f), ErrorCode::InvalidModel, "cannot write file: " + path);
  f << payload;
}

// canonical display parameter of each catalog entry, used for its fixtures
IVec fixture_theta(const std::string& name) {
  if (name == "c3") return {Int(0)};
  if (name == "conifold") return {Int(1), Int(-1)};
  if (name == "spp") return {Int(1), Int(1), Int(-2)};
  if (name == "c3z3") return {Int(2), Int(-1), Int(-1)};
  fail(ErrorCode::UnknownModel, "no fixture parameter for model: " + name);
}

void regen_fixtures(const std::string& dir) {
  for (const std::string& name : catalog_names()) {
    Dimer d = build_dimer(catalog_model(name));
    write_file(dir + "/" + name + "_polygon.json", dump(report_polygon(d)));
    IVec t = fixture_theta(name);
    write_file(dir + "/" + name + "_chamber.json", dump(report_chamber(d, t)));
    write_file(dir + "/" + name + "_walls.json", dump(report_walls(d, t)));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"dimer model moduli and wall crossing toolkit", "dimod"};
  app.require_subcommand(0, 1);

  bool regen = false;
  std::string fixtures_dir = "tests/fixtures";
  app.add_flag("--regen-fixtures", regen, "rewrite the catalog golden fixtures");
  app.add_option("--fixtures-dir", fixtures_dir, "directory for --regen-fixtures");

  std::string model_arg, theta_arg, out_path;
  int facet = 0, max_chambers = 64, max_len = 6;
  bool dot = false;

  auto common = [&](CLI::App* s, bool with_theta) {
    s->add_option("model", model_arg, "model file path or catalog:NAME")->required();
    s->add_option("--out", out_path, "write the report to this file instead of stdout");
    if (with_theta)
      s->add_option("--theta", theta_arg, "stability parameter, comma separated, sum zero")
          ->required();
    return s;
  };

  common(app.add_subcommand("validate", "parse and validate a model"), false);
  common(app.add_subcommand("quiver", "arrows and relations of the dual quiver"), false);
  common(app.add_subcommand("matchings", "perfect matchings and their height classes"), false);
  common(app.add_subcommand("polygon", "characteristic polygon"), false);
  common(app.add_subcommand("fan", "toric fan of the moduli space"), true);
  common(app.add_subcommand("chamber", "chamber of a stability parameter"), true);
  common(app.add_subcommand("walls", "classified facets of the chamber"), true);
  common(app.add_subcommand("cross", "cross one facet and verify the prediction"), true)
      ->add_option("--facet", facet, "index into the chamber facet list")
      ->required();
  CLI::App* sc_explore =
      common(app.add_subcommand("explore", "breadth-first chamber graph"), true);
  sc_explore->add_option("--max", max_chambers, "chamber budget");
  sc_explore->add_flag("--dot", dot, "emit DOT instead of JSON");
  common(app.add_subcommand("report", "exploration summary with geometry cross-check"), true)
      ->add_option("--max", max_chambers, "chamber budget");
  common(app.add_subcommand("census-paths", "path and class counts per vertex pair"), false)
      ->add_option("--max-len", max_len, "path length budget (0..8)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    json diag;
    diag["error"] = {{"code", code_name(ErrorCode::InvalidModel)}, {"message", e.what()}};
    out << dump(diag);
    return 1;
  }

  try {
    if (regen) {
      regen_fixtures(fixtures_dir);
      json j;
      j["fixtures_dir"] = fixtures_dir;
      j["models"] = catalog_names();
      out << dump(j);
      return 0;
    }
    check(app.get_subcommands().size() == 1, ErrorCode::InvalidModel, "missing subcommand");
    const std::string sub = app.get_subcommands().front()->get_name();

    Dimer d = build_dimer(resolve_model(model_arg));
    std::string payload;
    if (sub == "validate") {
      payload = dump(report_validate(d));
    } else if (sub == "quiver") {
      payload = dump(report_quiver(d));
    } else if (sub == "matchings") {
      payload = dump(report_matchings(d));
    } else if (sub == "polygon") {
      payload = dump(report_polygon(d));
    } else if (sub == "fan") {
      payload = dump(report_fan(d, parse_int_list(theta_arg)));
    } else if (sub == "chamber") {
      payload = dump(report_chamber(d, parse_int_list(theta_arg)));
    } else if (sub == "walls") {
      payload = dump(report_walls(d, parse_int_list(theta_arg)));
    } else if (sub == "cross") {
      payload = dump(report_cross(d, parse_int_list(theta_arg), facet));
    } else if (sub == "explore") {
      ChamberGraph g = explore(d, parse_int_list(theta_arg), max_chambers);
      payload = dot ? graph_dot(g) : dump(graph_json(g));
    } else if (sub == "report") {
      payload = dump(report_report(d, parse_int_list(theta_arg), max_chambers));
    } else if (sub == "census-paths") {
      payload = dump(report_paths(d, max_len));
    } else {
      fail(ErrorCode::Unreachable, "unhandled subcommand: " + sub);
    }

    if (out_path.empty())
      out << payload;
    else
      write_file(out_path, payload);
    return 0;
  } catch (const DimodError& e) {
    json diag;
    diag["error"] = {{"code", code_name(e.code())}, {"message", e.what()}};
    out << dump(diag);
    return exit_code_for(e.code());
  }
}

}  // namespace dimod
