#include "mhall/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mhall/errors.hpp"

namespace mhall {
namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError(where + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

PointedMatroid matroid_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("matroid document must be a JSON object");
  if (doc.contains("graph")) {
    const auto& g = doc["graph"];
    Graph graph;
    graph.vertices = string_list(g.value("vertices", nlohmann::json::array()), "graph.vertices");
    if (!g.contains("edges") || !g["edges"].is_array()) {
      throw ParseError("graph.edges must be an array");
    }
    int index = 0;
    for (const auto& e : g["edges"]) {
      std::string where = "graph.edges[" + std::to_string(index++) + "]";
      if (!e.is_object() || !e.contains("name") || !e.contains("ends")) {
        throw ParseError(where + " must be {\"name\":..., \"ends\":[u, v]}");
      }
      auto ends = string_list(e["ends"], where + ".ends");
      if (ends.size() != 2) throw ParseError(where + ".ends must list exactly two vertices");
      graph.edges.push_back({e["name"].get<std::string>(), ends[0], ends[1]});
    }
    if (!g.contains("loop") || !g["loop"].is_string()) {
      throw ParseError("graph.loop must name the distinguished loop edge");
    }
    graph.distinguished_loop = g["loop"].get<std::string>();
    return from_graph(graph);
  }

  if (!doc.contains("ground")) throw ParseError("matroid document is missing \"ground\"");
  GroundSet ground{string_list(doc["ground"], "ground")};

  if (doc.contains("flats")) {
    if (!doc["flats"].is_array()) throw ParseError("flats must be an array of label arrays");
    std::vector<Mask> flats;
    int index = 0;
    for (const auto& f : doc["flats"]) {
      flats.push_back(ground.mask_of(string_list(f, "flats[" + std::to_string(index++) + "]")));
    }
    return PointedMatroid::from_flats(std::move(ground), std::move(flats));
  }
  if (doc.contains("bases")) {
    if (!doc["bases"].is_array()) throw ParseError("bases must be an array of label arrays");
    std::vector<Mask> bases;
    int index = 0;
    for (const auto& b : doc["bases"]) {
      Mask m = ground.mask_of(string_list(b, "bases[" + std::to_string(index++) + "]"));
      if (has_bit(m, 0)) throw ParseError("bases must not contain the basepoint");
      bases.push_back(m);
    }
    return from_bases(ground, bases);
  }
  throw ParseError("matroid document needs one of \"flats\", \"bases\" or \"graph\"");
}

nlohmann::json matroid_to_json(const PointedMatroid& m) {
  nlohmann::json out;
  out["ground"] = m.ground().labels();
  nlohmann::json flats = nlohmann::json::array();
  for (Mask f : m.flats()) flats.push_back(m.ground().labels_of(f));
  out["flats"] = std::move(flats);
  return out;
}

namespace {

PointedMatroid fixture_atom(const std::string& name) {
  if (name == "zero") return zero_matroid();
  if (name == "a") return uniform(1, 1);
  if (name == "b") return uniform(0, 1);
  int r = -1, n = -1;
  if (std::sscanf(name.c_str(), "u_%d_%d", &r, &n) == 2) return uniform(r, n);
  if (std::sscanf(name.c_str(), "free_%d", &n) == 1) return free_matroid(GroundSet::numbered(n));
  throw ParseError("unknown fixture \"" + name + "\"");
}

bool is_fixture_atom(const std::string& name) {
  if (name == "zero" || name == "a" || name == "b") return true;
  int r, n;
  return std::sscanf(name.c_str(), "u_%d_%d", &r, &n) == 2 ||
         std::sscanf(name.c_str(), "free_%d", &n) == 1;
}

std::vector<std::string> split_plus(const std::string& name) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : name) {
    if (c == '+') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

bool is_fixture_name(const std::string& name) {
  auto parts = split_plus(name);
  for (const auto& p : parts) {
    if (!is_fixture_atom(p)) return false;
  }
  return !parts.empty();
}

PointedMatroid fixture(const std::string& name) {
  PointedMatroid acc = zero_matroid();
  for (const auto& part : split_plus(name)) acc = direct_sum(acc, fixture_atom(part));
  return acc;
}

PointedMatroid load_matroid(const std::string& name_or_path) {
  if (is_fixture_name(name_or_path)) return fixture(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw ParseError("cannot open matroid file: " + name_or_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(name_or_path + ": " + e.what());
  }
  return matroid_from_json(doc);
}

}  // namespace mhall
