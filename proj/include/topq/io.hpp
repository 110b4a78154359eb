#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "topq/homology.hpp"
#include "topq/lefschetz.hpp"

namespace topq {

using Json = nlohmann::ordered_json;

// {"name", "vertices", "maximal_simplices", optional "vertex_order"}. Throws Parse.
RawComplex parse_complex_json(const std::string& text);

struct RawMap {
  std::string name;
  std::string domain;
  std::string codomain;
  std::map<std::string, std::string> vertex_map;
};

// {"domain", "codomain", "vertex_map": {id: id}, optional "name"}. Throws Parse.
RawMap parse_map_json(const std::string& text);

std::string read_file(const std::string& path);

// Complexes addressed by file path or catalog name, and maps resolved against them.
class Workspace {
 public:
  // A readable file is parsed; anything else is looked up in the catalog.
  ComplexPtr complex(const std::string& arg);
  SimplicialMap map(const std::string& arg);

 private:
  ComplexPtr by_name(const std::string& name);
  std::map<std::string, ComplexPtr> loaded_;
};

Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const std::vector<std::size_t>& v);
Json betti_json(const GradedSpace& s, bool generators);
Json to_json(const Witness& w, const SimplicialComplex& domain);
Json to_json(const CoincidenceReport& r);

}  // namespace topq
