#include "topq/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "topq/error.hpp"

namespace topq {

int sort_sign(Simplex& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

SimplicialComplex SimplicialComplex::from_maximal(std::string name, std::vector<std::string> vertex_names,
                                                  const std::vector<Simplex>& maximal) {
  SimplicialComplex x;
  x.name_ = std::move(name);
  x.vertex_names_ = std::move(vertex_names);
  for (std::size_t i = 0; i < x.vertex_names_.size(); ++i) {
    if (!x.vertex_lookup_.emplace(x.vertex_names_[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::DuplicateVertex, "vertex '" + x.vertex_names_[i] + "' declared twice");
  }

  std::vector<std::set<Simplex>> faces;
  for (Simplex s : maximal) {
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorKind::DuplicateVertex, "repeated vertex in a simplex");
    for (int v : s)
      if (v < 0 || static_cast<std::size_t>(v) >= x.vertex_names_.size())
        throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
    if (s.size() > 24) throw Error(ErrorKind::Parse, "simplex dimension too large");
    if (faces.size() < s.size()) faces.resize(s.size());
    // All nonempty subsets, in bitmask order.
    const std::uint32_t full = (1u << s.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      faces[f.size() - 1].insert(std::move(f));
    }
  }
  // Isolated declared vertices are 0-simplices as well.
  if (!x.vertex_names_.empty()) {
    if (faces.empty()) faces.resize(1);
    for (std::size_t v = 0; v < x.vertex_names_.size(); ++v) faces[0].insert(Simplex{static_cast<int>(v)});
  }
  x.by_dim_.resize(faces.size());
  x.index_.resize(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d) {
    x.by_dim_[d].assign(faces[d].begin(), faces[d].end());
    for (std::size_t i = 0; i < x.by_dim_[d].size(); ++i) x.index_[d].emplace(x.by_dim_[d][i], i);
  }
  return x;
}

std::optional<int> SimplicialComplex::vertex_index(std::string_view name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return by_dim_[static_cast<std::size_t>(dim)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim > dimension()) return none;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dimension()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = dimension(); d >= 0; --d) {
    for (const auto& s : simplices(d)) {
      bool maximal = true;
      if (d < dimension()) {
        for (const auto& t : simplices(d + 1))
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
      }
      if (maximal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : by_dim_) f.push_back(level.size());
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d)
    chi += sign_of_parity(d) * static_cast<long>(count(d));
  return chi;
}

std::string SimplicialComplex::label(const Simplex& s) const {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += vertex_name(s[i]);
  }
  return out + "]";
}

SimplicialComplex SimplicialComplex::renamed(std::string name) const {
  SimplicialComplex x(*this);
  x.name_ = std::move(name);
  return x;
}

SimplicialComplex validate(const RawComplex& raw) {
  std::set<std::string> declared;
  for (const auto& v : raw.vertices)
    if (!declared.insert(v).second) throw Error(ErrorKind::DuplicateVertex, "vertex '" + v + "' declared twice");

  std::vector<std::string> order;
  if (raw.vertex_order) {
    order = *raw.vertex_order;
    std::set<std::string> in_order(order.begin(), order.end());
    if (in_order.size() != order.size() || in_order != declared)
      throw Error(ErrorKind::Parse, "vertex_order must be a permutation of vertices");
  } else {
    order.assign(declared.begin(), declared.end());  // lexicographic
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], static_cast<int>(i));

  std::vector<Simplex> maximal;
  for (const auto& raw_simplex : raw.maximal_simplices) {
    Simplex s;
    std::set<std::string> seen;
    for (const auto& v : raw_simplex) {
      if (!seen.insert(v).second) throw Error(ErrorKind::DuplicateVertex, "vertex '" + v + "' repeated in a simplex");
      auto it = index.find(v);
      if (it == index.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + v + "'");
      s.push_back(it->second);
    }
    maximal.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(raw.name, std::move(order), maximal);
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex img;
  img.reserve(s.size());
  for (int v : s) img.push_back(vertex_map.at(static_cast<std::size_t>(v)));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

SimplicialMap check_simplicial(std::vector<int> vertex_map, ComplexPtr domain, ComplexPtr codomain,
                               std::string name) {
  if (vertex_map.size() != domain->num_vertices())
    throw Error(ErrorKind::UnknownVertex, "vertex assignment is not total");
  for (int w : vertex_map)
    if (w < 0 || static_cast<std::size_t>(w) >= codomain->num_vertices())
      throw Error(ErrorKind::UnknownVertex, "image vertex out of range");
  SimplicialMap f{std::move(name), std::move(domain), std::move(codomain), std::move(vertex_map)};
  for (const auto& s : f.domain->maximal_simplices())
    if (!f.codomain->contains(f.image(s)))
      throw Error(ErrorKind::NotSimplicial,
                  "image of " + f.domain->label(s) + " is " + f.codomain->label(f.image(s)) +
                      ", not a simplex of " + f.codomain->name());
  return f;
}

SimplicialMap check_simplicial(const std::map<std::string, std::string>& assignment, ComplexPtr domain,
                               ComplexPtr codomain, std::string name) {
  std::vector<int> vm(domain->num_vertices(), -1);
  for (const auto& [from, to] : assignment) {
    auto a = domain->vertex_index(from);
    if (!a) throw Error(ErrorKind::UnknownVertex, "unknown domain vertex '" + from + "'");
    auto b = codomain->vertex_index(to);
    if (!b) throw Error(ErrorKind::UnknownVertex, "unknown codomain vertex '" + to + "'");
    vm[static_cast<std::size_t>(*a)] = *b;
  }
  for (std::size_t v = 0; v < vm.size(); ++v)
    if (vm[v] < 0) throw Error(ErrorKind::UnknownVertex, "no image for vertex '" + domain->vertex_name(static_cast<int>(v)) + "'");
  return check_simplicial(std::move(vm), std::move(domain), std::move(codomain), std::move(name));
}

SimplicialMap identity_map(ComplexPtr x) {
  std::vector<int> vm(x->num_vertices());
  std::iota(vm.begin(), vm.end(), 0);
  return SimplicialMap{"id_" + x->name(), x, x, std::move(vm)};
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.codomain.get() != g.domain.get() && f.codomain->name() != g.domain->name())
    throw Error(ErrorKind::DimensionMismatch, "cannot compose: codomain of f is not the domain of g");
  std::vector<int> vm(f.vertex_map.size());
  for (std::size_t v = 0; v < vm.size(); ++v)
    vm[v] = g.vertex_map.at(static_cast<std::size_t>(f.vertex_map[v]));
  return SimplicialMap{g.name + "." + f.name, f.domain, g.codomain, std::move(vm)};
}

namespace {

// Top simplices adjacent across each codimension-1 face.
std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> facet_incidence(const SimplicialComplex& x) {
  std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> inc;
  const int n = x.dimension();
  const auto& top = x.simplices(n);
  for (std::size_t t = 0; t < top.size(); ++t)
    for (std::size_t i = 0; i < top[t].size(); ++i) {
      Simplex face = top[t];
      face.erase(face.begin() + static_cast<long>(i));
      inc[face].emplace_back(t, i);
    }
  return inc;
}

bool closed_and_connected(const std::vector<Simplex>& top, int n, bool& closed) {
  std::map<Simplex, std::vector<std::size_t>> inc;
  for (std::size_t t = 0; t < top.size(); ++t)
    for (std::size_t i = 0; i < top[t].size(); ++i) {
      Simplex face = top[t];
      face.erase(face.begin() + static_cast<long>(i));
      inc[face].push_back(t);
    }
  closed = true;
  if (n > 0)
    for (const auto& [face, ts] : inc)
      if (ts.size() != 2) closed = false;
  if (top.empty()) return false;
  std::vector<std::vector<std::size_t>> adj(top.size());
  if (n > 0)
    for (const auto& [face, ts] : inc)
      for (std::size_t a = 0; a < ts.size(); ++a)
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
          adj[ts[a]].push_back(ts[b]);
          adj[ts[b]].push_back(ts[a]);
        }
  std::vector<bool> seen(top.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto t = q.front();
    q.pop();
    for (auto u : adj[t])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        q.push(u);
      }
  }
  return reached == top.size();
}

}  // namespace

ManifoldReport manifold_check(const SimplicialComplex& x) {
  ManifoldReport r;
  r.dimension = x.dimension();
  if (x.empty()) return r;
  const int n = r.dimension;
  r.pure = true;
  for (const auto& s : x.maximal_simplices())
    if (static_cast<int>(s.size()) - 1 != n) r.pure = false;

  if (n == 0) {
    r.closed_pseudomanifold = true;
    r.strongly_connected = x.count(0) == 1;
    r.links_ok = true;
    return r;
  }
  for (const auto& [face, ts] : facet_incidence(x)) {
    if (ts.size() == 1) ++r.boundary_faces;
    if (ts.size() > 2) ++r.singular_faces;
  }
  bool closed = false;
  r.strongly_connected = closed_and_connected(x.simplices(n), n, closed);
  r.closed_pseudomanifold = closed && x.count(n - 1) > 0;

  r.links_ok = true;
  if (n >= 2) {
    for (std::size_t v = 0; v < x.num_vertices() && r.links_ok; ++v) {
      std::vector<Simplex> link;
      for (const auto& s : x.simplices(n))
        if (std::binary_search(s.begin(), s.end(), static_cast<int>(v))) {
          Simplex l;
          for (int u : s)
            if (u != static_cast<int>(v)) l.push_back(u);
          link.push_back(std::move(l));
        }
      bool link_closed = false;
      const bool link_connected = closed_and_connected(link, n - 1, link_closed);
      if (!link_closed || !link_connected) r.links_ok = false;
    }
  }
  return r;
}

bool is_coherent(const SimplicialComplex& x, const std::vector<int>& signs) {
  const int n = x.dimension();
  if (signs.size() != x.count(n)) return false;
  if (n == 0) return true;
  for (const auto& [face, ts] : facet_incidence(x)) {
    if (ts.size() != 2) return false;
    const int a = signs[ts[0].first] * sign_of_parity(static_cast<long>(ts[0].second));
    const int b = signs[ts[1].first] * sign_of_parity(static_cast<long>(ts[1].second));
    if (a + b != 0) return false;
  }
  return true;
}

OrientationData orient(const SimplicialComplex& x) {
  const int n = x.dimension();
  if (x.empty()) throw Error(ErrorKind::NotClosed, "empty complex");
  OrientationData o;
  o.signs.assign(x.count(n), 0);
  if (n == 0) {
    std::fill(o.signs.begin(), o.signs.end(), 1);
    o.coherent = true;
    return o;
  }
  const auto report = manifold_check(x);
  if (!report.pure || !report.closed_pseudomanifold)
    throw Error(ErrorKind::NotClosed, x.name() + " is not a closed pseudo-manifold");

  const auto inc = facet_incidence(x);
  // For each top simplex: (neighbour, own face position, neighbour face position).
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>> adj(x.count(n));
  for (const auto& [face, ts] : inc) {
    adj[ts[0].first].emplace_back(ts[1].first, ts[0].second, ts[1].second);
    adj[ts[1].first].emplace_back(ts[0].first, ts[1].second, ts[0].second);
  }
  for (std::size_t start = 0; start < o.signs.size(); ++start) {
    if (o.signs[start] != 0) continue;
    o.signs[start] = 1;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      const auto t = q.front();
      q.pop();
      for (const auto& [u, i, j] : adj[t]) {
        const int want = -o.signs[t] * sign_of_parity(static_cast<long>(i + j));
        if (o.signs[u] == 0) {
          o.signs[u] = want;
          q.push(u);
        } else if (o.signs[u] != want) {
          throw Error(ErrorKind::NonOrientable, x.name() + " admits no coherent orientation");
        }
      }
    }
  }
  o.coherent = true;
  return o;
}

bool GeometricPoint::valid() const {
  if (coords.size() != carrier.size() || carrier.empty()) return false;
  Rational sum = 0;
  for (const auto& c : coords) {
    if (c < 0) return false;
    sum += c;
  }
  return sum == 1;
}

Subdivision barycentric_subdivide(const SimplicialComplex& x) {
  Subdivision sd;
  std::vector<std::string> names;
  for (int d = 0; d <= x.dimension(); ++d)
    for (const auto& s : x.simplices(d)) {
      std::string name;
      if (d == 0) {
        name = x.vertex_name(s[0]);
      } else {
        name = "b" + x.label(s);
      }
      sd.barycenter.emplace(s, static_cast<int>(names.size()));
      sd.provenance.push_back(s);
      names.push_back(std::move(name));
    }

  std::vector<Simplex> maximal;
  for (const auto& s : x.maximal_simplices()) {
    Simplex perm = s;
    do {
      Simplex flag;
      Simplex face;
      for (int v : perm) {
        face.insert(std::upper_bound(face.begin(), face.end(), v), v);
        flag.push_back(sd.barycenter.at(face));
      }
      maximal.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  sd.complex = SimplicialComplex::from_maximal("Sd(" + x.name() + ")", std::move(names), maximal);
  return sd;
}

namespace {

void staircase(const Simplex& a, const Simplex& b, std::size_t i, std::size_t j, std::size_t ny, Simplex& path,
               std::vector<Simplex>& out) {
  path.push_back(a[i] * static_cast<int>(ny) + b[j]);
  if (i + 1 == a.size() && j + 1 == b.size()) {
    out.push_back(path);
  } else {
    if (i + 1 < a.size()) staircase(a, b, i + 1, j, ny, path, out);
    if (j + 1 < b.size()) staircase(a, b, i, j + 1, ny, path, out);
  }
  path.pop_back();
}

}  // namespace

SimplicialComplex simplicial_product(const SimplicialComplex& x, const SimplicialComplex& y) {
  std::vector<std::string> names;
  for (const auto& v : x.vertex_names())
    for (const auto& w : y.vertex_names()) names.push_back("(" + v + "," + w + ")");
  std::vector<Simplex> maximal;
  Simplex path;
  for (const auto& a : x.maximal_simplices())
    for (const auto& b : y.maximal_simplices()) staircase(a, b, 0, 0, y.num_vertices(), path, maximal);
  return SimplicialComplex::from_maximal(x.name() + "x" + y.name(), std::move(names), maximal);
}

}  // namespace topq
