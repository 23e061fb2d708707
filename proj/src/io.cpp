#include "dimod/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dimod {

namespace {

using nlohmann::json;

void expect_keys(const json& j, const std::vector<std::string>& req,
                 const std::vector<std::string>& opt, const std::string& what) {
  check(j.is_object(), ErrorCode::InvalidModel, what + ": expected an object");
  for (const std::string& k : req)
    check(j.contains(k), ErrorCode::InvalidModel, what + ": missing field '" + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (std::find(req.begin(), req.end(), k) == req.end() &&
        std::find(opt.begin(), opt.end(), k) == opt.end())
      fail(ErrorCode::InvalidModel, what + ": unknown field '" + k + "'");
  }
}

int get_int(const json& j, const std::string& what) {
  check(j.is_number_integer(), ErrorCode::InvalidModel, what + ": expected an integer");
  return j.get<int>();
}

}  // namespace

DimerModel parse_model_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  check(!j.is_discarded(), ErrorCode::InvalidModel, "model file is not valid JSON");
  expect_keys(j, {"edges", "format_version", "name", "nodes", "rotation"}, {"v0"}, "model");
  check(j["format_version"].is_number_integer() && j["format_version"].get<int>() == 1,
        ErrorCode::InvalidModel, "unsupported format_version");

  DimerModel m;
  check(j["name"].is_string(), ErrorCode::InvalidModel, "name must be a string");
  m.name = j["name"].get<std::string>();

  check(j["nodes"].is_array(), ErrorCode::InvalidModel, "nodes must be an array");
  for (const json& jn : j["nodes"]) {
    expect_keys(jn, {"color", "id"}, {}, "node");
    DimerNode n;
    n.id = get_int(jn["id"], "node id");
    check(jn["color"].is_string(), ErrorCode::InvalidModel, "node color must be a string");
    std::string c = jn["color"].get<std::string>();
    if (c == "black")
      n.color = Color::Black;
    else if (c == "white")
      n.color = Color::White;
    else
      fail(ErrorCode::InvalidModel, "node color must be \"black\" or \"white\"");
    m.nodes.push_back(n);
  }

  check(j["edges"].is_array(), ErrorCode::InvalidModel, "edges must be an array");
  for (const json& je : j["edges"]) {
    expect_keys(je, {"black", "id", "white", "winding"}, {}, "edge");
    DimerEdge e;
    e.id = get_int(je["id"], "edge id");
    e.black = get_int(je["black"], "edge black endpoint");
    e.white = get_int(je["white"], "edge white endpoint");
    const json& w = je["winding"];
    check(w.is_array() && w.size() == 2, ErrorCode::InvalidModel,
          "edge winding must be a pair of integers");
    e.winding[0] = get_int(w[0], "winding");
    e.winding[1] = get_int(w[1], "winding");
    m.edges.push_back(e);
  }

  const json& jr = j["rotation"];
  check(jr.is_object(), ErrorCode::InvalidModel, "rotation must be an object");
  check(jr.size() == m.nodes.size(), ErrorCode::InvalidModel,
        "rotation must list every node exactly once");
  m.rotation.assign(m.nodes.size(), {});
  for (auto it = jr.begin(); it != jr.end(); ++it) {
    int v = -1;
    try {
      v = std::stoi(it.key());
    } catch (...) {
      v = -1;
    }
    check(v >= 0 && v < int(m.nodes.size()) && it.key() == std::to_string(v),
          ErrorCode::InvalidModel, "rotation key '" + it.key() + "' is not a node id");
    check(it.value().is_array(), ErrorCode::InvalidModel, "rotation value must be an array");
    for (const json& x : it.value()) m.rotation[size_t(v)].push_back(get_int(x, "rotation entry"));
  }

  if (j.contains("v0")) m.v0 = get_int(j["v0"], "v0");
  return m;
}

DimerModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  check(bool(in), ErrorCode::InvalidModel, "cannot read model file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model_json(ss.str());
}

std::string model_to_json(const DimerModel& m) {
  json j;
  j["format_version"] = 1;
  j["name"] = m.name;
  j["nodes"] = json::array();
  for (const DimerNode& n : m.nodes)
    j["nodes"].push_back({{"id", n.id}, {"color", n.color == Color::Black ? "black" : "white"}});
  j["edges"] = json::array();
  for (const DimerEdge& e : m.edges)
    j["edges"].push_back({{"id", e.id},
                          {"black", e.black},
                          {"white", e.white},
                          {"winding", {to_ll(e.winding[0]), to_ll(e.winding[1])}}});
  j["rotation"] = json::object();
  for (size_t v = 0; v < m.rotation.size(); ++v) j["rotation"][std::to_string(v)] = m.rotation[v];
  if (m.v0) j["v0"] = *m.v0;
  return j.dump(2) + "\n";
}

}  // namespace dimod
