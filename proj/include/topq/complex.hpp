#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topq/rational.hpp"

namespace topq {

// Strictly increasing vertex indices into the complex's vertex order.
using Simplex = std::vector<int>;

// Maximal-simplex description as read from a file, before validation.
struct RawComplex {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> maximal_simplices;
  std::optional<std::vector<std::string>> vertex_order;
};

// Finite abstract simplicial complex with a total vertex order. Immutable
// once built; every face of every simplex is present.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Builds the face closure of `maximal`. Vertex tuples may be unsorted and
  // are sorted into the vertex order; a repeated vertex is an error.
  static SimplicialComplex from_maximal(std::string name, std::vector<std::string> vertex_names,
                                        const std::vector<Simplex>& maximal);

  const std::string& name() const { return name_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  std::size_t num_vertices() const { return vertex_names_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::string& vertex_name(int v) const { return vertex_names_.at(static_cast<std::size_t>(v)); }
  std::optional<int> vertex_index(std::string_view name) const;

  std::size_t count(int dim) const;
  const std::vector<Simplex>& simplices(int dim) const;
  const Simplex& simplex(int dim, std::size_t i) const { return simplices(dim).at(i); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  std::vector<Simplex> maximal_simplices() const;
  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  std::string label(const Simplex& s) const;

  SimplicialComplex renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<std::string> vertex_names_;
  std::map<std::string, int, std::less<>> vertex_lookup_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

SimplicialComplex validate(const RawComplex& raw);

// Vertex assignment between two complexes whose images span simplices.
struct SimplicialMap {
  std::string name;
  ComplexPtr domain;
  ComplexPtr codomain;
  std::vector<int> vertex_map;

  // Image vertex set of a domain simplex, sorted and deduplicated.
  Simplex image(const Simplex& s) const;
};

SimplicialMap check_simplicial(const std::map<std::string, std::string>& assignment, ComplexPtr domain,
                               ComplexPtr codomain, std::string name = {});
SimplicialMap check_simplicial(std::vector<int> vertex_map, ComplexPtr domain, ComplexPtr codomain,
                               std::string name = {});
SimplicialMap identity_map(ComplexPtr x);
// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

struct ManifoldReport {
  int dimension = -1;
  bool pure = false;
  // Every (n-1)-simplex is a face of exactly two n-simplices.
  bool closed_pseudomanifold = false;
  bool strongly_connected = false;
  // Vertex links are connected closed pseudo-manifolds of dimension n-1 (n >= 2).
  bool links_ok = false;
  std::size_t boundary_faces = 0;
  std::size_t singular_faces = 0;

  bool closed_manifold_candidate() const {
    return pure && closed_pseudomanifold && strongly_connected && links_ok;
  }
};

ManifoldReport manifold_check(const SimplicialComplex& x);

struct OrientationData {
  // One sign per top-dimensional simplex, in canonical order.
  std::vector<int> signs;
  bool coherent = false;
};

// Deterministic sign propagation over the dual graph. Throws NotClosed or NonOrientable.
OrientationData orient(const SimplicialComplex& x);

// Checks that induced orientations cancel on every shared codimension-1 face.
bool is_coherent(const SimplicialComplex& x, const std::vector<int>& signs);

struct GeometricPoint {
  Simplex carrier;
  QVector coords;  // barycentric, one per carrier vertex

  bool valid() const;
};

struct Subdivision {
  SimplicialComplex complex;
  // provenance[v] is the simplex of the original complex whose barycenter is vertex v.
  std::vector<Simplex> provenance;
  // vertex of the subdivision for a simplex of the original complex
  std::map<Simplex, int> barycenter;
};

Subdivision barycentric_subdivide(const SimplicialComplex& x);

// Staircase triangulation of |X| x |Y| over the product vertex order.
SimplicialComplex simplicial_product(const SimplicialComplex& x, const SimplicialComplex& y);

// Sign of the permutation sorting `v` (distinct entries) into increasing order.
int sort_sign(Simplex& v);

}  // namespace topq
