#include "topq/chains.hpp"

#include <algorithm>
#include <set>

#include "topq/error.hpp"

namespace topq {

std::size_t ChainComplex::size(int m) const {
  if (m < 0 || m > top_degree()) return 0;
  return basis[static_cast<std::size_t>(m)].size();
}

SparseMatrix ChainComplex::d(int m) const {
  if (m < 1 || m > top_degree()) return SparseMatrix(size(m - 1), size(m));
  return boundary[static_cast<std::size_t>(m)];
}

SparseMatrix ChainComplex::coboundary(int m) const { return d(m + 1).transpose(); }

namespace {

// Boundary matrices over an explicit basis; faces outside the basis are dropped.
ChainComplex assemble(std::string name, std::vector<std::vector<Simplex>> basis) {
  ChainComplex c;
  c.name = std::move(name);
  c.basis = std::move(basis);
  c.boundary.resize(c.basis.size());
  for (std::size_t m = 0; m < c.basis.size(); ++m) {
    if (m == 0) {
      c.boundary[0] = SparseMatrix(0, c.basis[0].size());
      continue;
    }
    std::map<Simplex, std::size_t> below;
    for (std::size_t i = 0; i < c.basis[m - 1].size(); ++i) below.emplace(c.basis[m - 1][i], i);
    SparseMatrix dm(c.basis[m - 1].size(), c.basis[m].size());
    for (std::size_t j = 0; j < c.basis[m].size(); ++j) {
      const auto& s = c.basis[m][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(i));
        auto it = below.find(face);
        if (it != below.end()) dm.add(it->second, j, Rational(sign_of_parity(static_cast<long>(i))));
      }
    }
    c.boundary[m] = std::move(dm);
  }
  return c;
}

}  // namespace

ChainComplex build_chain_complex(const SimplicialComplex& x) {
  std::vector<std::vector<Simplex>> basis;
  for (int m = 0; m <= x.dimension(); ++m) basis.push_back(x.simplices(m));
  return assemble(x.name(), std::move(basis));
}

Subcomplex make_subcomplex(const ComplexPtr& x, const std::vector<Simplex>& simplices, std::string name) {
  std::set<int> used;
  for (const auto& s : simplices) {
    if (!x->contains(s)) throw Error(ErrorKind::NotSubcomplex, x->label(s) + " is not a simplex of " + x->name());
    used.insert(s.begin(), s.end());
  }
  std::vector<int> local(x->num_vertices(), -1);
  std::vector<std::string> names;
  std::vector<int> vertex_map;
  for (int v : used) {
    local[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
    names.push_back(x->vertex_name(v));
    vertex_map.push_back(v);
  }
  std::vector<Simplex> maximal;
  for (const auto& s : simplices) {
    Simplex t;
    for (int v : s) t.push_back(local[static_cast<std::size_t>(v)]);
    maximal.push_back(std::move(t));
  }
  auto sub = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_maximal(name, std::move(names), maximal));
  return Subcomplex{sub, SimplicialMap{"incl_" + name, sub, x, std::move(vertex_map)}};
}

SimplicialMap inclusion_by_names(const ComplexPtr& sub, const ComplexPtr& super) {
  std::vector<int> vm;
  for (const auto& name : sub->vertex_names()) {
    auto v = super->vertex_index(name);
    if (!v) throw Error(ErrorKind::NotSubcomplex, "vertex '" + name + "' missing from " + super->name());
    vm.push_back(*v);
  }
  SimplicialMap inc{"incl_" + sub->name(), sub, super, std::move(vm)};
  for (int m = 0; m <= sub->dimension(); ++m)
    for (const auto& s : sub->simplices(m))
      if (!super->contains(inc.image(s)))
        throw Error(ErrorKind::NotSubcomplex, sub->label(s) + " is not a simplex of " + super->name());
  return inc;
}

RelativePair build_relative(const SimplicialMap& inclusion) {
  const auto& x = *inclusion.codomain;
  const auto& a = *inclusion.domain;
  std::set<int> targets(inclusion.vertex_map.begin(), inclusion.vertex_map.end());
  if (targets.size() != inclusion.vertex_map.size())
    throw Error(ErrorKind::NotSubcomplex, "inclusion is not injective on vertices");

  RelativePair r{inclusion, build_chain_complex(x), build_chain_complex(a), {}, {}};
  std::vector<std::vector<Simplex>> basis;
  for (int m = 0; m <= x.dimension(); ++m) {
    std::set<Simplex> in_a;
    for (const auto& s : a.simplices(m)) {
      Simplex img = inclusion.image(s);
      if (img.size() != s.size() || !x.contains(img))
        throw Error(ErrorKind::NotSubcomplex, a.label(s) + " does not map onto a simplex of " + x.name());
      in_a.insert(std::move(img));
    }
    std::vector<Simplex> level;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < x.count(m); ++i)
      if (!in_a.count(x.simplex(m, i))) {
        level.push_back(x.simplex(m, i));
        kept.push_back(i);
      }
    basis.push_back(std::move(level));
    r.kept.push_back(std::move(kept));
  }
  r.quotient = assemble(x.name() + "/" + a.name(), std::move(basis));
  return r;
}

ChainMap RelativePair::projection() const {
  ChainMap p;
  for (int m = 0; m <= ambient.top_degree(); ++m) {
    SparseMatrix pm(quotient.size(m), ambient.size(m));
    const auto& k = kept[static_cast<std::size_t>(m)];
    for (std::size_t q = 0; q < k.size(); ++q) pm.set(q, k[q], 1);
    p.push_back(std::move(pm));
  }
  return p;
}

ChainMap RelativePair::inclusion_map() const {
  ChainMap f = induced_chain_map(inclusion);
  // Pad to the ambient degree range.
  for (int m = static_cast<int>(f.size()); m <= ambient.top_degree(); ++m)
    f.push_back(SparseMatrix(ambient.size(m), sub.size(m)));
  return f;
}

SparseMatrix RelativePair::connecting(int m) const {
  SparseMatrix out(sub.size(m - 1), quotient.size(m));
  if (m < 1 || m > ambient.top_degree()) return out;
  std::map<Simplex, std::size_t> a_index;
  const auto& a = *inclusion.domain;
  for (std::size_t i = 0; i < a.count(m - 1); ++i) a_index.emplace(inclusion.image(a.simplex(m - 1, i)), i);
  const auto dm = ambient.d(m);
  const auto& k = kept[static_cast<std::size_t>(m)];
  for (std::size_t q = 0; q < k.size(); ++q)
    for (const auto& [row, value] : dm.column(k[q])) {
      auto it = a_index.find(ambient.basis[static_cast<std::size_t>(m - 1)][row]);
      if (it != a_index.end()) out.add(it->second, q, value);
    }
  return out;
}

ChainMap induced_chain_map(const SimplicialMap& f) {
  const auto& x = *f.domain;
  const auto& y = *f.codomain;
  ChainMap out;
  for (int m = 0; m <= x.dimension(); ++m) {
    SparseMatrix fm(y.count(m), x.count(m));
    for (std::size_t j = 0; j < x.count(m); ++j) {
      Simplex img;
      for (int v : x.simplex(m, j)) img.push_back(f.vertex_map[static_cast<std::size_t>(v)]);
      const int sign = sort_sign(img);
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;  // degenerate
      auto i = y.index_of(img);
      if (!i) throw Error(ErrorKind::NotSimplicial, "image of " + x.label(x.simplex(m, j)) + " missing");
      fm.set(*i, j, Rational(sign));
    }
    out.push_back(std::move(fm));
  }
  return out;
}

bool is_chain_map(const ChainComplex& src, const ChainComplex& dst, const ChainMap& f) {
  for (int m = 1; m <= src.top_degree(); ++m) {
    const auto& fm = f.at(static_cast<std::size_t>(m));
    const auto& fm1 = f.at(static_cast<std::size_t>(m - 1));
    if (!(dst.d(m) * fm == fm1 * src.d(m))) return false;
  }
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out;
  for (std::size_t m = 0; m < f.size() && m < g.size(); ++m) out.push_back(g[m] * f[m]);
  return out;
}

Chain boundary_of(const ChainComplex& c, const Chain& z) {
  return Chain{z.degree - 1, c.d(z.degree).apply(z.coeffs)};
}

Chain cone(const SimplicialComplex& x, int p, const Chain& z) {
  Chain out{z.degree + 1, QVector(x.count(z.degree + 1), Rational(0))};
  const auto& level = x.simplices(z.degree);
  for (std::size_t i = 0; i < z.coeffs.size(); ++i) {
    if (z.coeffs[i] == 0) continue;
    const auto& s = level.at(i);
    if (std::binary_search(s.begin(), s.end(), p)) continue;
    Simplex joined{p};
    joined.insert(joined.end(), s.begin(), s.end());
    const int sign = sort_sign(joined);
    auto j = x.index_of(joined);
    if (!j) throw Error(ErrorKind::ConeNotDefined, x.vertex_name(p) + " and " + x.label(s) + " span no simplex");
    out.coeffs[*j] += sign * z.coeffs[i];
  }
  return out;
}

ChainMap subdivision_chain_map(const SimplicialComplex& x, const Subdivision& sd) {
  const auto& y = sd.complex;
  ChainMap out;
  for (int m = 0; m <= x.dimension(); ++m) {
    SparseMatrix sm(y.count(m), x.count(m));
    for (std::size_t j = 0; j < x.count(m); ++j) {
      const auto& s = x.simplex(m, j);
      const int b = sd.barycenter.at(s);
      if (m == 0) {
        sm.set(static_cast<std::size_t>(y.index_of(Simplex{b}).value()), j, 1);
        continue;
      }
      // Sd of the boundary, from the previous degree's columns.
      QVector below(y.count(m - 1), Rational(0));
      const auto& prev = out[static_cast<std::size_t>(m - 1)];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(i));
        const auto fi = x.index_of(face).value();
        for (const auto& [row, value] : prev.column(fi)) below[row] += sign_of_parity(static_cast<long>(i)) * value;
      }
      const Chain c = cone(y, b, Chain{m - 1, below});
      for (std::size_t r = 0; r < c.coeffs.size(); ++r)
        if (c.coeffs[r] != 0) sm.set(r, j, c.coeffs[r]);
    }
    out.push_back(std::move(sm));
  }
  return out;
}

}  // namespace topq
