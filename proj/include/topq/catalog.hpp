#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topq/complex.hpp"

namespace topq {

struct CatalogComplex {
  std::string name;
  std::string provenance;
  ComplexPtr complex;
};

struct CatalogMap {
  std::string name;
  std::string provenance;
  SimplicialMap map;
};

// Built once; the same ComplexPtr is returned on every call, so catalog maps
// share their domain and codomain objects.
const std::vector<CatalogComplex>& catalog_complexes();
const std::vector<CatalogMap>& catalog_maps();

// Accepts the aliases "torus" (torus9) and "rp2" (rp2_6). Throws Parse when unknown.
ComplexPtr catalog_complex(const std::string& name);
const SimplicialMap& catalog_map(const std::string& name);
std::optional<std::string> resolve_alias(const std::string& name);

// Orientable closed manifolds of the catalog.
std::vector<std::string> catalog_manifolds();

struct CatalogPair {
  std::string f, g;
};
// Pairs with a common domain and codomain of equal dimension.
const std::vector<CatalogPair>& catalog_coincidence_pairs();

}  // namespace topq
