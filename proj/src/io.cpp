#include "topq/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "topq/catalog.hpp"
#include "topq/error.hpp"

namespace topq {

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(ErrorKind::Parse, std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

RawComplex parse_complex_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object()) throw Error(ErrorKind::Parse, "complex file must hold an object");
  RawComplex raw;
  if (!j.contains("name") || !j["name"].is_string()) throw Error(ErrorKind::Parse, "missing \"name\"");
  raw.name = j["name"].get<std::string>();
  if (!j.contains("vertices")) throw Error(ErrorKind::Parse, "missing \"vertices\"");
  raw.vertices = string_list(j["vertices"], "vertices");
  if (!j.contains("maximal_simplices") || !j["maximal_simplices"].is_array())
    throw Error(ErrorKind::Parse, "missing \"maximal_simplices\"");
  for (const auto& s : j["maximal_simplices"]) raw.maximal_simplices.push_back(string_list(s, "simplex"));
  if (j.contains("vertex_order")) raw.vertex_order = string_list(j["vertex_order"], "vertex_order");
  return raw;
}

RawMap parse_map_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object()) throw Error(ErrorKind::Parse, "map file must hold an object");
  RawMap raw;
  for (const char* key : {"domain", "codomain"})
    if (!j.contains(key) || !j[key].is_string()) throw Error(ErrorKind::Parse, std::string("missing \"") + key + "\"");
  raw.domain = j["domain"].get<std::string>();
  raw.codomain = j["codomain"].get<std::string>();
  raw.name = j.value("name", raw.domain + "->" + raw.codomain);
  if (!j.contains("vertex_map") || !j["vertex_map"].is_object()) throw Error(ErrorKind::Parse, "missing \"vertex_map\"");
  for (const auto& [k, v] : j["vertex_map"].items()) {
    if (!v.is_string()) throw Error(ErrorKind::Parse, "vertex_map values must be strings");
    raw.vertex_map[k] = v.get<std::string>();
  }
  return raw;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ComplexPtr Workspace::by_name(const std::string& name) {
  auto it = loaded_.find(name);
  if (it != loaded_.end()) return it->second;
  return catalog_complex(name);
}

ComplexPtr Workspace::complex(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    auto x = std::make_shared<const SimplicialComplex>(validate(parse_complex_json(read_file(arg))));
    loaded_[x->name()] = x;
    return x;
  }
  return by_name(arg);
}

SimplicialMap Workspace::map(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    const RawMap raw = parse_map_json(read_file(arg));
    return check_simplicial(raw.vertex_map, by_name(raw.domain), by_name(raw.codomain), raw.name);
  }
  return catalog_map(arg);
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json to_json(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

Json to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json betti_json(const GradedSpace& s, bool generators) {
  Json j;
  j["betti"] = to_json(s.betti());
  if (generators) {
    Json g = Json::array();
    for (int m = 0; m <= s.top_degree(); ++m) {
      Json level = Json::array();
      for (const auto& rep : s.representatives(m)) level.push_back(to_json(rep));
      g.push_back(std::move(level));
    }
    j["generators"] = std::move(g);
  }
  return j;
}

Json to_json(const Witness& w, const SimplicialComplex& domain) {
  Json j;
  j["status"] = to_string(w.status);
  j["simplices_checked"] = w.simplices_checked;
  if (w.status == WitnessStatus::Found) {
    j["subdivision_level"] = w.level;
    j["carrier"] = w.carrier_label;
    j["coords"] = to_json(w.coords);
    j["base_carrier"] = domain.label(w.base_carrier);
    j["base_coords"] = to_json(w.base_coords);
    j["image"] = to_json(w.image);
  }
  return j;
}

Json to_json(const CoincidenceReport& r) {
  Json j;
  j["f"] = r.f_name;
  j["g"] = r.g_name;
  j["dimension"] = r.n;
  j["lambda"] = to_json(r.lambda);
  Json t;
  t["pull_shriek"] = to_json(r.lambda);
  t["shriek_pull"] = to_json(r.trace_shriek_pull);
  t["homology_shriek_push"] = to_json(r.trace_homology_shriek);
  t["push_homology_shriek"] = to_json(r.trace_push_shriek);
  t["shriek_pull_literal_degree"] = to_json(r.literal_shriek_pull);
  t["homology_shriek_push_literal_degree"] = to_json(r.literal_homology_shriek);
  j["traces"] = std::move(t);
  j["pairing_lambda_Y_of_1"] = to_json(r.pairing);
  j["pairing_Lambda_Y"] = to_json(r.pairing_lefschetz_class);
  j["intersection"] = to_json(r.intersection);
  j["intersection_reversed"] = to_json(r.intersection_reversed);
  j["consistent"] = r.consistent();
  j["literal_agreement"] = r.literal_agreement();
  return j;
}

}  // namespace topq
