#include "topq/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "topq/catalog.hpp"
#include "topq/error.hpp"
#include "topq/lefschetz.hpp"

namespace topq {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Rational small() { return Rational(integer(-3, 3)); }
  QVector vector(std::size_t n) {
    QVector v(n);
    for (auto& x : v) x = small();
    return v;
  }
  QMatrix matrix(std::size_t r, std::size_t c) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = small();
    return m;
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

 private:
  std::mt19937_64 gen_;
};

std::string str(const QVector& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << to_string(v[i]);
  os << "]";
  return os.str();
}

std::string str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// Collects cases of one law and keeps the first failure.
class Law {
 public:
  explicit Law(std::string name) { r_.law = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (!ok && r_.pass) {
      r_.pass = false;
      r_.counterexample = describe();
    }
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }
  LawResult done() { return std::move(r_); }

 private:
  LawResult r_;
};

// Shared analyses, built on first use.
class Cache {
 public:
  FactorPtr factor(const ComplexPtr& x) {
    auto& slot = factors_[x->name()];
    if (!slot) slot = analyze(x);
    return slot;
  }
  ManifoldPtr manifold(const ComplexPtr& x) {
    auto& slot = manifolds_[x->name()];
    if (!slot) slot = prepare_manifold(factor(x));
    return slot;
  }
  ManifoldMap mmap(const SimplicialMap& f) { return make_manifold_map(f, manifold(f.domain), manifold(f.codomain)); }
  const GradedSpace& homology(const ComplexPtr& x) { return factor(x)->homology; }
  const GradedSpace& cohomology(const ComplexPtr& x) { return factor(x)->cohomology; }

 private:
  std::map<std::string, FactorPtr> factors_;
  std::map<std::string, ManifoldPtr> manifolds_;
};

bool is_manifold_name(const std::string& name) {
  for (const auto& m : catalog_manifolds())
    if (m == name) return true;
  return false;
}

std::vector<const CatalogMap*> manifold_maps() {
  std::vector<const CatalogMap*> out;
  for (const auto& m : catalog_maps())
    if (is_manifold_name(m.map.domain->name()) && is_manifold_name(m.map.codomain->name())) out.push_back(&m);
  return out;
}

// Pairs (g, f) of catalog maps with g after f defined.
std::vector<std::pair<const CatalogMap*, const CatalogMap*>> composable(bool manifolds_only) {
  std::vector<std::pair<const CatalogMap*, const CatalogMap*>> out;
  const auto& maps = catalog_maps();
  for (const auto& f : maps)
    for (const auto& g : maps) {
      if (f.map.codomain->name() != g.map.domain->name()) continue;
      if (manifolds_only && !(is_manifold_name(f.map.domain->name()) && is_manifold_name(g.map.codomain->name())))
        continue;
      out.emplace_back(&g, &f);
    }
  return out;
}

HClass random_class(Rng& rng, const GradedSpace& s, int deg) { return HClass{deg, rng.vector(s.dim(deg))}; }

bool same(const HClass& a, const HClass& b) { return a.degree == b.degree && a.coords == b.coords; }

std::string cls(const HClass& c) { return "deg " + std::to_string(c.degree) + " " + str(c.coords); }

QMatrix scaled_identity(std::size_t n, const Rational& s) { return QMatrix::identity(n).scaled(s); }

Simplex by_names(const SimplicialComplex& x, const std::vector<std::string>& names) {
  Simplex s;
  for (const auto& n : names) s.push_back(*x.vertex_index(n));
  sort_sign(s);
  return s;
}

// ---------------------------------------------------------------- axioms

struct NamedPair {
  ComplexPtr x;
  std::vector<Simplex> sub;
  std::string name;
};

std::vector<NamedPair> catalog_pairs() {
  std::vector<NamedPair> out;
  const auto octa = catalog_complex("octahedron");
  const auto& o = *octa;
  out.push_back({octa,
                 {by_names(o, {"a", "b"}), by_names(o, {"b", "c"}), by_names(o, {"c", "d"}), by_names(o, {"d", "a"})},
                 "octahedron,equator"});
  out.push_back({octa,
                 {by_names(o, {"n", "a", "b"}), by_names(o, {"n", "b", "c"}), by_names(o, {"n", "c", "d"}),
                  by_names(o, {"n", "d", "a"})},
                 "octahedron,upper"});
  const auto hex = catalog_complex("hexagon");
  out.push_back({hex, {by_names(*hex, {"v0"}), by_names(*hex, {"v3"})}, "hexagon,two points"});
  const auto disk = catalog_complex("disk");
  out.push_back({disk,
                 {by_names(*disk, {"d0", "d1"}), by_names(*disk, {"d1", "d2"}), by_names(*disk, {"d0", "d2"})},
                 "disk,boundary"});
  for (const char* n : {"torus9", "genus2", "rp2_6"}) {
    const auto x = catalog_complex(n);
    out.push_back({x, {x->simplex(x->dimension(), 0)}, std::string(n) + ",top simplex"});
    out.push_back({x, {x->simplex(1, 0), x->simplex(1, 1)}, std::string(n) + ",two edges"});
  }
  return out;
}

std::vector<LawResult> suite_axioms(Rng& rng, Cache& cache) {
  std::vector<LawResult> out;
  const auto& complexes = catalog_complexes();

  {
    Law law("closure_idempotent");
    for (const auto& c : complexes) {
      const auto& x = *c.complex;
      RawComplex raw{x.name(), x.vertex_names(), {}, x.vertex_names()};
      for (const auto& s : x.maximal_simplices()) {
        std::vector<std::string> names;
        for (int v : s) names.push_back(x.vertex_name(v));
        raw.maximal_simplices.push_back(names);
      }
      const auto y = validate(raw);
      bool ok = y.dimension() == x.dimension();
      for (int d = 0; ok && d <= x.dimension(); ++d) ok = y.simplices(d) == x.simplices(d);
      law.check(ok, [&] { return x.name() + ": re-validating the maximal simplices changed the complex"; });
    }
    out.push_back(law.done());
  }
  {
    Law law("orientation_stable_and_coherent");
    for (const auto& c : complexes) {
      if (!is_manifold_name(c.name) || c.complex->dimension() < 1) continue;
      const auto a = orient(*c.complex);
      const auto b = orient(*c.complex);
      law.check(a.signs == b.signs && a.coherent && is_coherent(*c.complex, a.signs),
                [&] { return c.name + ": orientation not reproducible or not coherent"; });
    }
    out.push_back(law.done());
  }
  {
    Law law("boundary_squared_zero");
    for (const auto& c : complexes) {
      const auto& cc = cache.factor(c.complex)->chains;
      for (int m = 1; m <= cc.top_degree(); ++m)
        law.check((cc.d(m - 1) * cc.d(m)).is_zero(),
                  [&] { return c.name + ": d" + std::to_string(m - 1) + " d" + std::to_string(m) + " != 0"; });
    }
    out.push_back(law.done());
  }
  {
    Law law("coboundary_squared_zero");
    for (const auto& c : complexes) {
      const auto& cc = cache.factor(c.complex)->chains;
      for (int m = 0; m + 1 < cc.top_degree(); ++m)
        law.check((cc.coboundary(m + 1) * cc.coboundary(m)).is_zero(),
                  [&] { return c.name + ": delta delta != 0 at degree " + std::to_string(m); });
    }
    out.push_back(law.done());
  }
  {
    Law law("induced_chain_map_commutes");
    for (const auto& m : catalog_maps()) {
      const auto& src = cache.factor(m.map.domain)->chains;
      const auto& dst = cache.factor(m.map.codomain)->chains;
      law.check(is_chain_map(src, dst, induced_chain_map(m.map)), [&] { return m.name; });
    }
    out.push_back(law.done());
  }
  {
    Law law("cone_boundary_formula");
    for (const auto& c : complexes) {
      const auto& x = *c.complex;
      const auto& cc = cache.factor(c.complex)->chains;
      for (std::size_t p = 0; p < x.num_vertices(); ++p) {
        for (int k = 1; k < x.dimension(); ++k) {
          // random chain on simplices that span a simplex with p
          Chain z{k, QVector(cc.size(k), Rational(0))};
          for (std::size_t i = 0; i < cc.size(k); ++i) {
            Simplex s = x.simplex(k, i);
            bool has_p = false;
            for (int v : s) has_p = has_p || v == static_cast<int>(p);
            if (!has_p) {
              s.push_back(static_cast<int>(p));
              sort_sign(s);
              if (!x.contains(s)) continue;
            }
            z.coeffs[i] = rng.small();
          }
          const Chain lhs = boundary_of(cc, cone(x, static_cast<int>(p), z));
          const Chain rhs{k, z.coeffs - cone(x, static_cast<int>(p), boundary_of(cc, z)).coeffs};
          law.check(lhs.coeffs == rhs.coeffs,
                    [&] { return c.name + ": p=" + x.vertex_name(static_cast<int>(p)) + " z=" + str(z.coeffs); });
        }
      }
    }
    out.push_back(law.done());
  }
  const auto pairs = catalog_pairs();
  {
    Law law("short_exact_sequence_of_pair");
    for (const auto& p : pairs) {
      const auto sub = make_subcomplex(p.x, p.sub, p.name);
      const auto rel = build_relative(sub.inclusion);
      const auto inc = rel.inclusion_map();
      const auto proj = rel.projection();
      for (int m = 0; m <= rel.ambient.top_degree(); ++m) {
        const auto im = static_cast<std::size_t>(m);
        const std::size_t a = rel.sub.size(m), x = rel.ambient.size(m), q = rel.quotient.size(m);
        const bool inj = im >= inc.size() || rank(inc[im]) == a;
        const bool surj = rank(proj[im]) == q;
        const bool zero = im >= inc.size() || (proj[im] * inc[im]).is_zero();
        law.check(inj && surj && zero && a + q == x,
                  [&] { return p.name + ": not exact in degree " + std::to_string(m); });
      }
    }
    out.push_back(law.done());
  }
  {
    Law law("long_exact_sequence_exact");
    for (const auto& p : pairs) {
      const auto sub = make_subcomplex(p.x, p.sub, p.name);
      const auto les = long_exact_sequence(build_relative(sub.inclusion));
      for (const auto& node : les.nodes)
        law.check(node.exact(), [&] {
          return p.name + ": node " + node.group + " degree " + std::to_string(node.degree) + " not exact";
        });
    }
    out.push_back(law.done());
  }
  {
    Law law("excision_isomorphism");
    for (const char* n : {"octahedron", "torus7", "hexagon"}) {
      const auto base = catalog_complex(n);
      const auto sd = barycentric_subdivide(*base);
      const auto x = std::make_shared<const SimplicialComplex>(sd.complex);
      const int p = sd.barycenter.at(Simplex{0});
      // U = open star of p; A = every top simplex meeting the closed star of p.
      std::vector<Simplex> u;
      std::vector<bool> near(x->num_vertices(), false);
      for (int d = 0; d <= x->dimension(); ++d)
        for (const auto& s : x->simplices(d)) {
          bool has = false;
          for (int v : s) has = has || v == p;
          if (has) {
            u.push_back(s);
            for (int v : s) near[static_cast<std::size_t>(v)] = true;
          }
        }
      std::vector<Simplex> a;
      for (const auto& s : x->simplices(x->dimension())) {
        bool meets = false;
        for (int v : s) meets = meets || near[static_cast<std::size_t>(v)];
        if (meets) a.push_back(s);
      }
      const auto rep = excision_check(x, a, u);
      law.check(rep.isomorphism(), [&] {
        return std::string(n) + ": excised " + str(rep.excised_betti) + " full " + str(rep.full_betti);
      });
      law.note(std::string("Sd ") + n + ": H_*(X,A) = " + str(rep.full_betti));
    }
    out.push_back(law.done());
  }
  {
    Law law("dimension_axiom");
    const auto pt = catalog_complex("point");
    const auto f = cache.factor(pt);
    law.check(f->homology.betti() == std::vector<std::size_t>{1}, [&] { return "H_*(point) = " + str(f->homology.betti()); });
    law.check(f->cohomology.betti() == std::vector<std::size_t>{1},
              [&] { return "H^*(point) = " + str(f->cohomology.betti()); });
    out.push_back(law.done());
  }
  {
    Law law("universal_coefficients_dimensions");
    for (const auto& c : complexes) {
      const auto f = cache.factor(c.complex);
      law.check(f->homology.betti() == f->cohomology.betti(), [&] { return c.name; });
      law.note(c.name + " " + str(f->homology.betti()));
    }
    out.push_back(law.done());
  }
  {
    Law law("functoriality");
    for (const auto& [g, f] : composable(false)) {
      const auto gf = compose(g->map, f->map);
      const auto& hx = cache.homology(f->map.domain);
      const auto& hy = cache.homology(f->map.codomain);
      const auto& hz = cache.homology(g->map.codomain);
      const auto& cx = cache.cohomology(f->map.domain);
      const auto& cy = cache.cohomology(f->map.codomain);
      const auto& cz = cache.cohomology(g->map.codomain);
      const bool push = induced_homology(gf, hx, hz) ==
                        compose(induced_homology(g->map, hy, hz), induced_homology(f->map, hx, hy));
      const bool pull = induced_cohomology(gf, cz, cx) ==
                        compose(induced_cohomology(f->map, cy, cx), induced_cohomology(g->map, cz, cy));
      law.check(push && pull, [&] { return g->name + " after " + f->name; });
    }
    out.push_back(law.done());
  }
  {
    Law law("kronecker_naturality");
    for (const auto& m : catalog_maps()) {
      const auto& hx = cache.homology(m.map.domain);
      const auto& hy = cache.homology(m.map.codomain);
      const auto& cx = cache.cohomology(m.map.domain);
      const auto& cy = cache.cohomology(m.map.codomain);
      const auto push = induced_homology(m.map, hx, hy);
      const auto pull = induced_cohomology(m.map, cy, cx);
      for (int d = 0; d <= std::min(hx.top_degree(), hy.top_degree()); ++d) {
        const HClass a = random_class(rng, cy, d);
        const HClass s = random_class(rng, hx, d);
        law.check(kronecker(cx, pull.apply(a), hx, s) == kronecker(cy, a, hy, push.apply(s)),
                  [&] { return m.name + " degree " + std::to_string(d); });
      }
    }
    out.push_back(law.done());
  }
  return out;
}

// ---------------------------------------------------------------- subdivision

std::vector<LawResult> suite_subdivision(Rng&, Cache& cache) {
  Law euler("euler_characteristic_invariant");
  Law betti("betti_invariant");
  Law chain("subdivision_chain_map");
  Law iso("subdivision_induces_isomorphism");
  for (const auto& c : catalog_complexes()) {
    const auto& x = *c.complex;
    const auto sd = barycentric_subdivide(x);
    const auto sx = std::make_shared<const SimplicialComplex>(sd.complex);
    euler.check(x.euler_characteristic() == sx->euler_characteristic(), [&] { return c.name; });
    const auto cx = build_chain_complex(x);
    const auto csd = build_chain_complex(*sx);
    const auto hx = GradedSpace::homology(cx);
    const auto hsd = GradedSpace::homology(csd);
    betti.check(hx.betti() == hsd.betti(), [&] { return c.name + " " + str(hx.betti()) + " vs " + str(hsd.betti()); });
    betti.note(c.name + " " + str(hx.betti()) + " -> " + str(hsd.betti()) + " on " + std::to_string(sx->f_vector().back()) +
               " top simplices");
    const auto sdm = subdivision_chain_map(x, sd);
    chain.check(is_chain_map(cx, csd, sdm), [&] { return c.name; });
    const auto induced = induced_on(hx, hsd, sdm);
    bool ok = true;
    for (int d = 0; d <= hx.top_degree(); ++d) {
      const auto& b = induced.block(d);
      ok = ok && b.rows() == b.cols() && b.rank() == b.rows();
    }
    iso.check(ok, [&] { return c.name; });
  }
  (void)cache;
  return {euler.done(), betti.done(), chain.done(), iso.done()};
}

// ---------------------------------------------------------------- products

Cochain random_cochain(Rng& rng, const ChainComplex& c, int deg) { return Cochain{deg, rng.vector(c.size(deg))}; }

QVector random_cocycle(Rng& rng, const Factor& f, int deg) {
  const auto& coh = f.cohomology;
  QVector v = coh.representative(random_class(rng, coh, deg));
  if (deg > 0) v = v + f.chains.coboundary(deg - 1).apply(rng.vector(f.chains.size(deg - 1)));
  return v;
}

std::vector<LawResult> suite_products(Rng& rng, Cache& cache) {
  Law unit("cup_unit_chain_level");
  Law assoc("cup_associative_chain_level");
  Law skew("cup_skew_commutative_in_cohomology");
  Law capd("cap_duality_chain_level");
  Law nat("cup_naturality");
  for (const auto& c : catalog_complexes()) {
    const auto& x = *c.complex;
    const auto f = cache.factor(c.complex);
    const auto& cc = f->chains;
    const int n = x.dimension();
    const Cochain one = unit_cochain(x);
    for (int trial = 0; trial < 4; ++trial) {
      const int p = static_cast<int>(rng.integer(0, n));
      const Cochain a = random_cochain(rng, cc, p);
      unit.check(cup(x, one, a).coeffs == a.coeffs && cup(x, a, one).coeffs == a.coeffs,
                 [&] { return c.name + " a=" + str(a.coeffs); });
      const int q = static_cast<int>(rng.integer(0, n - p));
      const int r = static_cast<int>(rng.integer(0, n - p - q));
      const Cochain b = random_cochain(rng, cc, q);
      const Cochain e = random_cochain(rng, cc, r);
      assoc.check(cup(x, cup(x, a, b), e).coeffs == cup(x, a, cup(x, b, e)).coeffs,
                  [&] { return c.name + " degrees " + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r); });

      const Cochain za{p, random_cocycle(rng, *f, p)};
      const Cochain zb{q, random_cocycle(rng, *f, q)};
      const QVector diff =
          cup(x, za, zb).coeffs - Rational(sign_of_parity(static_cast<long>(p) * q)) * cup(x, zb, za).coeffs;
      skew.check(f->cohomology.is_boundary(p + q, diff),
                 [&] { return c.name + " degrees " + std::to_string(p) + "," + std::to_string(q); });

      const Chain s{p + q, rng.vector(cc.size(p + q))};
      capd.check(evaluate(cup(x, a, b), s) == evaluate(a, cap(x, b, s)),
                 [&] { return c.name + " degrees " + std::to_string(p) + "," + std::to_string(q); });
    }
  }
  for (const auto& m : catalog_maps()) {
    const auto fx = cache.factor(m.map.domain);
    const auto fy = cache.factor(m.map.codomain);
    const auto pull = induced_cohomology(m.map, fy->cohomology, fx->cohomology);
    const int top = std::min(fx->complex->dimension(), fy->complex->dimension());
    for (int p = 0; p <= top; ++p)
      for (int q = 0; p + q <= top; ++q) {
        const HClass a = random_class(rng, fy->cohomology, p);
        const HClass b = random_class(rng, fy->cohomology, q);
        nat.check(same(pull.apply(cup(*fy, a, b)), cup(*fx, pull.apply(a), pull.apply(b))),
                  [&] { return m.name + " " + cls(a) + " " + cls(b); });
      }
  }

  Law cross_nat("cross_naturality");
  Law swap_law("swap_sign_and_kronecker");
  Law prod_cap("cap_duality_on_product");
  Law prod_skew("cup_skew_commutative_on_product");
  const auto maps = manifold_maps();
  for (std::size_t i = 0; i < maps.size(); i += 3) {
    for (std::size_t j = 1; j < maps.size(); j += 4) {
      const auto& f = maps[i]->map;
      const auto& g = maps[j]->map;
      const auto px = product_space(cache.factor(f.domain), cache.factor(g.domain));
      const auto py = product_space(cache.factor(f.codomain), cache.factor(g.codomain));
      const auto fp = induced_homology(f, px.x->homology, py.x->homology);
      const auto gp = induced_homology(g, px.y->homology, py.y->homology);
      const auto fu = induced_cohomology(f, py.x->cohomology, px.x->cohomology);
      const auto gu = induced_cohomology(g, py.y->cohomology, px.y->cohomology);
      for (int p = 0; p <= px.x->complex->dimension(); ++p)
        for (int q = 0; q <= px.y->complex->dimension(); ++q) {
          const HClass s = random_class(rng, px.x->homology, p);
          const HClass t = random_class(rng, px.y->homology, q);
          const bool h = apply_factorwise(fp.total(), gp.total(), cross_h(px, s, t)) ==
                         cross_h(py, fp.apply(s), gp.apply(t));
          const HClass a = random_class(rng, py.x->cohomology, p);
          const HClass b = random_class(rng, py.y->cohomology, q);
          const bool c = apply_factorwise(fu.total(), gu.total(), cross(py, a, b)) ==
                         cross(px, fu.apply(a), gu.apply(b));
          cross_nat.check(h && c, [&] { return maps[i]->name + " x " + maps[j]->name; });
        }
    }
  }
  const std::vector<std::pair<std::string, std::string>> products{
      {"hexagon", "octahedron"}, {"octahedron", "torus7"}, {"torus9", "hexagon"}, {"octahedron", "octahedron"}};
  for (const auto& [xn, yn] : products) {
    const auto fx = cache.factor(catalog_complex(xn));
    const auto fy = cache.factor(catalog_complex(yn));
    const auto p = product_space(fx, fy);
    const auto q = product_space(fy, fx);
    for (int trial = 0; trial < 6; ++trial) {
      const int dx = static_cast<int>(rng.integer(0, fx->complex->dimension()));
      const int dy = static_cast<int>(rng.integer(0, fy->complex->dimension()));
      const HClass a = random_class(rng, fx->cohomology, dx);
      const HClass b = random_class(rng, fy->cohomology, dy);
      const HClass s = random_class(rng, fx->homology, dx);
      const HClass t = random_class(rng, fy->homology, dy);
      const Rational sg(sign_of_parity(static_cast<long>(dx) * dy));
      const bool signs = swap(p, cross(p, a, b)) == cross(q, b, a).scaled(sg) &&
                         swap(p, cross_h(p, s, t)) == cross_h(q, t, s).scaled(sg);
      const bool kr = kronecker_on_product(q, swap(p, cross(p, a, b)), swap(p, cross_h(p, s, t))) ==
                      kronecker_on_product(p, cross(p, a, b), cross_h(p, s, t));
      swap_law.check(signs && kr, [&] { return xn + " x " + yn + " degrees " + std::to_string(dx) + "," + std::to_string(dy); });
    }
    const int total = fx->complex->dimension() + fy->complex->dimension();
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < fx->cohomology.total_dim(); ++i)
      for (std::size_t j = 0; j < fy->cohomology.total_dim(); ++j) idx.emplace_back(i, j);
    auto random_homogeneous = [&](Variance v, int deg) {
      const auto& gx = v == Variance::Cohomology ? fx->cohomology : fx->homology;
      const auto& gy = v == Variance::Cohomology ? fy->cohomology : fy->homology;
      TensorClass t = p.zero(v);
      for (std::size_t i = 0; i < gx.total_dim(); ++i)
        for (std::size_t j = 0; j < gy.total_dim(); ++j)
          if (gx.degree_of(i) + gy.degree_of(j) == deg) t.coeffs(i, j) = rng.small();
      return t;
    };
    for (int trial = 0; trial < 6; ++trial) {
      const int da = static_cast<int>(rng.integer(0, total));
      const int db = static_cast<int>(rng.integer(0, total - da));
      const TensorClass a = random_homogeneous(Variance::Cohomology, da);
      const TensorClass b = random_homogeneous(Variance::Cohomology, db);
      const TensorClass s = random_homogeneous(Variance::Homology, da + db);
      prod_cap.check(kronecker_on_product(p, cup_on_product(p, a, b), s) ==
                         kronecker_on_product(p, a, cap_on_product(p, b, s)),
                     [&] { return xn + " x " + yn + " degrees " + std::to_string(da) + "," + std::to_string(db); });
      prod_skew.check(cup_on_product(p, a, b) ==
                          cup_on_product(p, b, a).scaled(Rational(sign_of_parity(static_cast<long>(da) * db))),
                      [&] { return xn + " x " + yn + " degrees " + std::to_string(da) + "," + std::to_string(db); });
    }
  }
  return {unit.done(),      assoc.done(),    skew.done(),     capd.done(),     nat.done(),
          cross_nat.done(), swap_law.done(), prod_cap.done(), prod_skew.done()};
}

// ---------------------------------------------------------------- kunneth

std::vector<LawResult> suite_kunneth(Rng&, Cache& cache) {
  Law law("kunneth_dimensions");
  const std::vector<std::pair<std::string, std::string>> products{{"triangle", "triangle"}, {"hexagon", "triangle"},
                                                                  {"interval", "triangle"}, {"point", "octahedron"},
                                                                  {"triangle", "octahedron"}, {"octahedron", "octahedron"}};
  for (const auto& [xn, yn] : products) {
    const auto x = catalog_complex(xn);
    const auto y = catalog_complex(yn);
    const auto model = product_space(cache.factor(x), cache.factor(y)).betti();
    const auto tri = simplicial_product(*x, *y);
    const auto direct = GradedSpace::homology(build_chain_complex(tri)).betti();
    law.check(model == direct, [&] { return xn + " x " + yn + ": model " + str(model) + " direct " + str(direct); });
    law.note(xn + " x " + yn + ": tensor model " + str(model) + ", triangulated (" +
             std::to_string(tri.f_vector().back()) + " top simplices) " + str(direct));
  }
  Law torus("kunneth_matches_catalog_torus");
  const auto model = product_space(cache.factor(catalog_complex("hexagon")), cache.factor(catalog_complex("triangle"))).betti();
  for (const char* t : {"torus9", "torus7"}) {
    const auto b = cache.homology(catalog_complex(t)).betti();
    torus.check(model == b, [&] { return std::string(t) + " " + str(b) + " vs " + str(model); });
  }
  return {law.done(), torus.done()};
}

// ---------------------------------------------------------------- duality

std::vector<LawResult> suite_duality(Rng& rng, Cache& cache) {
  std::vector<LawResult> out;
  Law inv("duality_invertible");
  Law sym("betti_symmetry");
  for (const auto& name : catalog_manifolds()) {
    const auto m = cache.manifold(catalog_complex(name));
    bool ok = true;
    for (int q = 0; q <= m->n; ++q) {
      const auto prod = m->d_inv[static_cast<std::size_t>(m->n - q)] * m->d[static_cast<std::size_t>(q)];
      ok = ok && prod == QMatrix::identity(m->cohomology().dim(q));
    }
    inv.check(ok, [&] { return name; });
    const auto b = m->homology().betti();
    bool s = true;
    for (std::size_t q = 0; q < b.size(); ++q) s = s && b[q] == b[b.size() - 1 - q];
    sym.check(s, [&] { return name + " " + str(b); });
  }
  out.push_back(inv.done());
  out.push_back(sym.done());
  {
    Law law("non_orientable_rejected");
    ErrorKind got = ErrorKind::Parse;
    bool threw = false;
    try {
      prepare_manifold(catalog_complex("rp2_6"));
    } catch (const Error& e) {
      threw = true;
      got = e.kind();
    }
    law.check(threw && got == ErrorKind::NonOrientable, [&] { return std::string("rp2_6 gave ") + (threw ? to_string(got) : "no error"); });
    out.push_back(law.done());
  }

  Law tr_h("push_after_homology_transfer_is_degree");
  Law tr_c("cohomology_transfer_after_pull_is_degree");
  Law cap3("homology_transfer_of_cap");
  Law cup3("cohomology_transfer_of_cup");
  Law cap4("push_of_cap_with_transfer");
  for (const auto* cm : manifold_maps()) {
    const auto f = cache.mmap(cm->map);
    const Rational d = degree(f);
    tr_h.note(cm->name + " degree " + to_string(d));
    const auto t = transfers(f);
    const auto& X = *f.x;
    const auto& Y = *f.y;
    bool hom = true, coh = true;
    for (int q = 0; q <= Y.n; ++q) {
      hom = hom && compose(f.push, t.homology).block(q) == scaled_identity(Y.homology().dim(q), d);
      coh = coh && compose(t.cohomology, f.pull).block(q) == scaled_identity(Y.cohomology().dim(q), d);
    }
    tr_h.check(hom, [&] { return cm->name; });
    tr_c.check(coh, [&] { return cm->name; });
    for (int p = 0; p <= Y.n; ++p)
      for (int q = p; q <= Y.n; ++q) {
        const HClass a = random_class(rng, Y.cohomology(), p);
        const HClass b = random_class(rng, Y.homology(), q);
        cap3.check(same(t.homology.apply(cap(*Y.factor, a, b)), cap(*X.factor, f.pull.apply(a), t.homology.apply(b))),
                   [&] { return cm->name + " " + cls(a) + " " + cls(b); });
        const HClass ax = random_class(rng, X.cohomology(), p);
        const Rational s(sign_of_parity(static_cast<long>(Y.n - q) * (Y.n - X.n)));
        const HClass lhs = f.push.apply(cap(*X.factor, ax, t.homology.apply(b)));
        const HClass rhs = cap(*Y.factor, t.cohomology.apply(ax), b);
        cap4.check(lhs.degree == rhs.degree && lhs.coords == s * rhs.coords,
                   [&] { return cm->name + " " + cls(ax) + " " + cls(b); });
      }
    for (int p = 0; p <= Y.n; ++p)
      for (int q = 0; p + q <= Y.n; ++q) {
        const HClass a = random_class(rng, Y.cohomology(), p);
        const HClass b = random_class(rng, X.cohomology(), q);
        cup3.check(same(t.cohomology.apply(cup(*X.factor, f.pull.apply(a), b)), cup(*Y.factor, a, t.cohomology.apply(b))),
                   [&] { return cm->name + " " + cls(a) + " " + cls(b); });
      }
  }
  for (auto* l : {&tr_h, &tr_c, &cap3, &cup3, &cap4}) out.push_back(l->done());

  {
    Law law("transfer_of_composite");
    for (const auto& [g, f] : composable(true)) {
      const auto F = cache.mmap(f->map);
      const auto G = cache.mmap(g->map);
      const auto GF = compose(G, F);
      const auto tf = transfers(F), tg = transfers(G), tgf = transfers(GF);
      law.check(tgf.cohomology == compose(tg.cohomology, tf.cohomology) &&
                    tgf.homology == compose(tf.homology, tg.homology),
                [&] { return g->name + " after " + f->name; });
    }
    out.push_back(law.done());
  }
  {
    Law law("duality_of_cup_is_cap_of_duality");
    for (const auto& name : catalog_manifolds()) {
      const auto m = cache.manifold(catalog_complex(name));
      for (int p = 0; p <= m->n; ++p)
        for (int q = 0; p + q <= m->n; ++q) {
          const HClass a = random_class(rng, m->cohomology(), p);
          const HClass b = random_class(rng, m->cohomology(), q);
          law.check(same(duality(*m, cup(*m->factor, a, b)), cap(*m->factor, a, duality(*m, b))),
                    [&] { return name + " " + cls(a) + " " + cls(b); });
        }
    }
    out.push_back(law.done());
  }

  const std::vector<std::pair<std::string, std::string>> pairs{
      {"hexagon", "octahedron"}, {"octahedron", "hexagon"}, {"torus7", "hexagon"}, {"octahedron", "octahedron"}, {"hexagon", "triangle"}};
  {
    Law law("product_duality_factorwise");
    for (const auto& [xn, yn] : pairs) {
      const auto X = cache.manifold(catalog_complex(xn));
      const auto Y = cache.manifold(catalog_complex(yn));
      const auto p = manifold_product(*X, *Y);
      for (int trial = 0; trial < 4; ++trial) {
        TensorClass t = p.zero(Variance::Cohomology);
        t.coeffs = rng.matrix(t.coeffs.rows(), t.coeffs.cols());
        law.check(product_duality(p, *X, *Y, t) == product_duality_factorwise(p, *X, *Y, t),
                  [&] { return xn + " x " + yn; });
        const TensorClass d = product_duality(p, *X, *Y, t);
        law.check(product_duality_inverse(p, *X, *Y, d) == t, [&] { return xn + " x " + yn + " inverse"; });
      }
    }
    out.push_back(law.done());
  }
  {
    Law law("transfer_of_product");
    const auto maps = manifold_maps();
    for (std::size_t i = 0; i < maps.size(); i += 2)
      for (std::size_t j = 1; j < maps.size(); j += 5) {
        const auto F = cache.mmap(maps[i]->map);
        const auto G = cache.mmap(maps[j]->map);
        const auto tf = transfers(F), tg = transfers(G);
        const auto pxz = manifold_product(*F.x, *G.x);
        const auto pyw = manifold_product(*F.y, *G.y);
        for (int p = 0; p <= F.x->n; ++p)
          for (int q = 0; q <= G.x->n; ++q) {
            const HClass a = random_class(rng, F.x->cohomology(), p);
            const HClass b = random_class(rng, G.x->cohomology(), q);
            const TensorClass pushed = apply_factorwise(F.push.total(), G.push.total(),
                                                        product_duality(pxz, *F.x, *G.x, cross(pxz, a, b)));
            const TensorClass lhs = product_duality_inverse(pyw, *F.y, *G.y, pushed);
            const TensorClass rhs = cross(pyw, tf.cohomology.apply(a), tg.cohomology.apply(b));
            const HClass s = random_class(rng, F.y->homology(), p);
            const HClass t = random_class(rng, G.y->homology(), q);
            const TensorClass pulled = apply_factorwise(F.pull.total(), G.pull.total(),
                                                        product_duality_inverse(pyw, *F.y, *G.y, cross_h(pyw, s, t)));
            const TensorClass lhs_h = product_duality(pxz, *F.x, *G.x, pulled);
            const TensorClass rhs_h = cross_h(pxz, tf.homology.apply(s), tg.homology.apply(t));
            law.check(lhs == rhs && lhs_h == rhs_h, [&] { return maps[i]->name + " x " + maps[j]->name; });
          }
      }
    out.push_back(law.done());
  }
  {
    Law law("intersection_via_diagonal_transfer");
    for (const auto& name : catalog_manifolds()) {
      const auto m = cache.manifold(catalog_complex(name));
      const auto xx = manifold_product(*m, *m);
      const int n = m->n;
      for (int p = 0; p <= n; ++p)
        for (int q = n - p; q <= n; ++q) {
          const HClass a = random_class(rng, m->homology(), p);
          const HClass b = random_class(rng, m->homology(), q);
          const TensorClass u = product_duality_inverse(xx, *m, *m, cross_h(xx, a, b));
          const QVector pulled = diagonal_pullback(xx, u);
          const HClass shriek = duality(*m, m->cohomology().extract(2 * n - p - q, pulled));
          const HClass dot = intersection(*m, a, b);
          const Rational s(sign_of_parity(static_cast<long>(n) * (n - q)));
          law.check(dot.degree == shriek.degree && dot.coords == s * shriek.coords,
                    [&] { return name + " " + cls(a) + " " + cls(b); });
        }
    }
    out.push_back(law.done());
  }
  return out;
}

// ---------------------------------------------------------------- euler, claim

std::vector<LawResult> suite_euler(Rng&, Cache& cache) {
  Law law("euler_class_and_number");
  for (const auto& name : catalog_manifolds()) {
    const auto m = cache.manifold(catalog_complex(name));
    const auto e = euler_data(m);
    law.check(e.consistent(), [&] {
      return name + ": euler number " + to_string(e.euler_number) + " combinatorial " + std::to_string(e.combinatorial);
    });
    law.note(name + " chi = " + to_string(e.euler_number));
  }
  return {law.done()};
}

std::vector<LawResult> suite_claim(Rng&, Cache& cache) {
  Law law("lefschetz_class_coefficients");
  Law remark("lefschetz_iso_of_identity");
  for (const auto& name : catalog_manifolds()) {
    const auto m = cache.manifold(catalog_complex(name));
    const auto l = lefschetz_class(m);
    law.check(l.extraction_matches(), [&] { return name; });
    remark.check(lefschetz_iso(*m, l.space, identity_hom(*m)) == l.value.scaled(Rational(sign_of_parity(m->n))),
                 [&] { return name; });
  }
  return {law.done(), remark.done()};
}

// ---------------------------------------------------------------- coincidence, witness

std::vector<LawResult> suite_coincidence(Rng& rng, Cache& cache) {
  Law routes("all_routes_agree");
  Law anti("antisymmetry");
  Law comp("precomposition_scales_by_degree");
  Law lemma("pullback_of_lefschetz_iso");
  Law chi("self_coincidence_is_euler");
  std::size_t literal_ok = 0;
  for (const auto& pr : catalog_coincidence_pairs()) {
    const auto f = cache.mmap(catalog_map(pr.f));
    const auto g = cache.mmap(catalog_map(pr.g));
    const auto r = coincidence_number(f, g);
    routes.check(r.consistent(), [&] { return pr.f + "," + pr.g; });
    if (r.literal_agreement()) ++literal_ok;
    else
      routes.note("literal reading differs: " + pr.f + "," + pr.g + ": n=" + std::to_string(r.n) + " lambda=" + to_string(r.lambda) +
                   " eps(zeta_f.zeta_g)=" + to_string(r.intersection) + " Lambda_Y pairing=" +
                   to_string(r.pairing_lefschetz_class));
    routes.note(pr.f + "," + pr.g + " lambda=" + to_string(r.lambda));
    const auto back = coincidence_number(g, f);
    anti.check(r.lambda == r.sign_n * back.lambda, [&] { return pr.f + "," + pr.g; });

    for (const auto* h : manifold_maps()) {
      if (h->map.codomain->name() != f.x->name()) continue;
      const auto H = cache.mmap(h->map);
      const auto rh = coincidence_number(compose(f, H), compose(g, H));
      comp.check(rh.lambda == degree(H) * r.lambda, [&] { return pr.f + "," + pr.g + " after " + h->name; });
    }

    const auto& X = *f.x;
    const auto& Y = *f.y;
    LefschetzHom sigma;
    for (int p = 0; p <= Y.n; ++p) {
      const auto d = Y.cohomology().dim(p);
      sigma.push_back(rng.matrix(d, d));
    }
    const auto tg = transfers(g);
    LefschetzHom moved;
    for (int p = 0; p <= X.n; ++p) moved.push_back(f.pull.block(p) * sigma[static_cast<std::size_t>(p)] * tg.cohomology.block(p));
    const auto xx = product_space(X.factor, X.factor);
    const auto yy = product_space(Y.factor, Y.factor);
    lemma.check(apply_factorwise(f.pull.total(), g.pull.total(), lefschetz_iso(Y, yy, sigma)) ==
                    lefschetz_iso(X, xx, moved),
                [&] { return pr.f + "," + pr.g; });
  }
  routes.note(std::to_string(literal_ok) + " of " + std::to_string(catalog_coincidence_pairs().size()) +
               " pairs agree with every formula read literally");
  for (const auto& name : catalog_manifolds()) {
    const auto m = cache.manifold(catalog_complex(name));
    const auto id = make_manifold_map(identity_map(m->factor->complex), m, m);
    const auto r = coincidence_number(id, id);
    chi.check(r.lambda == m->factor->complex->euler_characteristic() && r.lambda == euler_data(m).euler_number,
              [&] { return name + " lambda(1,1)=" + to_string(r.lambda); });
  }
  return {routes.done(), anti.done(), comp.done(), lemma.done(), chi.done()};
}

std::vector<LawResult> suite_witness(Rng&, Cache& cache) {
  Law found("nonzero_lambda_has_verified_witness");
  Law none("no_false_witness_claim");
  for (const auto& pr : catalog_coincidence_pairs()) {
    const auto& fm = catalog_map(pr.f);
    const auto& gm = catalog_map(pr.g);
    const auto r = coincidence_number(cache.mmap(fm), cache.mmap(gm));
    const bool nonzero = r.lambda != 0;
    const auto w = coincidence_witness(fm, gm, 3, nonzero);
    const bool verified = w.status == WitnessStatus::Found && verify_witness(fm, gm, w.base_carrier, w.base_coords);
    if (nonzero) found.check(verified, [&] { return pr.f + "," + pr.g + ": " + to_string(w.status); });
    none.check(w.status != WitnessStatus::Found || verified, [&] { return pr.f + "," + pr.g; });
    std::string line = pr.f + "," + pr.g + " lambda=" + to_string(r.lambda) + " " + to_string(w.status);
    if (w.status == WitnessStatus::Found)
      line += " at " + fm.domain->label(w.base_carrier) + " " + str(w.base_coords) + " level " + std::to_string(w.level);
    found.note(line);
  }
  return {found.done(), none.done()};
}

using SuiteFn = std::vector<LawResult> (*)(Rng&, Cache&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"axioms", suite_axioms},     {"subdivision", suite_subdivision}, {"products", suite_products},
      {"kunneth", suite_kunneth},   {"duality", suite_duality},         {"euler", suite_euler},
      {"claim", suite_claim},       {"coincidence", suite_coincidence}, {"witness", suite_witness}};
  return s;
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& l : laws)
    if (!l.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : suites()) {
    if (n != name) continue;
    SuiteReport rep;
    rep.suite = name;
    rep.seed = seed;
    Rng rng(seed);
    Cache cache;
    const auto start = std::chrono::steady_clock::now();
    rep.laws = fn(rng, cache);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }
  throw Error(ErrorKind::Parse, "unknown suite " + name);
}

}  // namespace topq
