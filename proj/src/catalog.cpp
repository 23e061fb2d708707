#include "dimod/catalog.hpp"

#include "dimod/io.hpp"

namespace dimod {

namespace {

// One black and one white node joined by three edges; one hexagonal face.
const char* kC3 = R"json({
  "format_version": 1,
  "name": "c3",
  "nodes": [{"id": 0, "color": "black"}, {"id": 1, "color": "white"}],
  "edges": [
    {"id": 0, "black": 0, "white": 1, "winding": [0, 0]},
    {"id": 1, "black": 0, "white": 1, "winding": [1, 0]},
    {"id": 2, "black": 0, "white": 1, "winding": [0, 1]}
  ],
  "rotation": {"0": [0, 1, 2], "1": [0, 1, 2]}
})json";

const char* kConifold = R"json({
  "format_version": 1,
  "name": "conifold",
  "nodes": [{"id": 0, "color": "black"}, {"id": 1, "color": "white"}],
  "edges": [
    {"id": 0, "black": 0, "white": 1, "winding": [0, 0]},
    {"id": 1, "black": 0, "white": 1, "winding": [1, 0]},
    {"id": 2, "black": 0, "white": 1, "winding": [1, 1]},
    {"id": 3, "black": 0, "white": 1, "winding": [0, 1]}
  ],
  "rotation": {"0": [0, 1, 2, 3], "1": [0, 1, 2, 3]}
})json";

// Hexagonal lattice with a three-fold symmetric fundamental domain; quiver is
// the McKay quiver of Z/3 acting with weights (1,1,1).
const char* kC3Z3 = R"json({
  "format_version": 1,
  "name": "c3z3",
  "nodes": [
    {"id": 0, "color": "black"}, {"id": 1, "color": "black"}, {"id": 2, "color": "black"},
    {"id": 3, "color": "white"}, {"id": 4, "color": "white"}, {"id": 5, "color": "white"}
  ],
  "edges": [
    {"id": 0, "black": 0, "white": 4, "winding": [-1, 0]},
    {"id": 1, "black": 1, "white": 3, "winding": [0, 0]},
    {"id": 2, "black": 2, "white": 5, "winding": [0, 0]},
    {"id": 3, "black": 0, "white": 3, "winding": [0, 0]},
    {"id": 4, "black": 1, "white": 4, "winding": [0, 0]},
    {"id": 5, "black": 1, "white": 5, "winding": [-1, 0]},
    {"id": 6, "black": 2, "white": 3, "winding": [1, 1]},
    {"id": 7, "black": 0, "white": 5, "winding": [-2, -1]},
    {"id": 8, "black": 2, "white": 4, "winding": [0, 0]}
  ],
  "rotation": {
    "0": [3, 0, 7], "1": [4, 5, 1], "2": [2, 6, 8],
    "3": [1, 3, 6], "4": [8, 4, 0], "5": [7, 2, 5]
  }
})json";

// Suspended pinch point: two quadrivalent white nodes, one trivalent pair,
// quiver has a loop at the base face.
const char* kSpp = R"json({
  "format_version": 1,
  "name": "spp",
  "nodes": [
    {"id": 0, "color": "black"}, {"id": 1, "color": "black"},
    {"id": 2, "color": "white"}, {"id": 3, "color": "white"}
  ],
  "edges": [
    {"id": 0, "black": 1, "white": 2, "winding": [1, 0]},
    {"id": 1, "black": 0, "white": 3, "winding": [0, -1]},
    {"id": 2, "black": 0, "white": 2, "winding": [0, 0]},
    {"id": 3, "black": 1, "white": 2, "winding": [0, 0]},
    {"id": 4, "black": 1, "white": 3, "winding": [1, 0]},
    {"id": 5, "black": 0, "white": 3, "winding": [1, -1]},
    {"id": 6, "black": 1, "white": 3, "winding": [0, 0]}
  ],
  "rotation": {"0": [1, 5, 2], "1": [0, 4, 6, 3], "2": [2, 3, 0], "3": [5, 4, 6, 1]}
})json";

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"c3", "c3z3", "conifold", "spp"};
  return names;
}

DimerModel catalog_model(const std::string& name) {
  const char* text = nullptr;
  if (name == "c3")
    text = kC3;
  else if (name == "c3z3")
    text = kC3Z3;
  else if (name == "conifold")
    text = kConifold;
  else if (name == "spp")
    text = kSpp;
  else
    fail(ErrorCode::UnknownModel, "unknown catalog model '" + name + "'");
  return parse_model_json(text);
}

DimerModel resolve_model(const std::string& arg) {
  const std::string prefix = "catalog:";
  if (arg.rfind(prefix, 0) == 0) return catalog_model(arg.substr(prefix.size()));
  return load_model_file(arg);
}

}  // namespace dimod
