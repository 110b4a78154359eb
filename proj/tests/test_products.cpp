#include <memory>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "topq/products.hpp"

using namespace topq;

namespace {

HClass basis(const GradedSpace& s, int deg, std::size_t i) { return s.basis_class(deg, i); }

// Cochain pullback along a simplicial map: (f^# a)(s) = a(f_# s).
Cochain pullback(const SimplicialMap& f, const Cochain& a) {
  const auto m = induced_chain_map(f);
  return Cochain{a.degree, m[static_cast<std::size_t>(a.degree)].transpose().apply(a.coeffs)};
}

}  // namespace

TEST_SUITE("products") {

TEST_CASE("cup and cap units at chain level") {
  std::mt19937_64 gen(9);
  for (const char* n : {"octahedron", "torus7", "disk"}) {
    const auto x = catalog_complex(n);
    const auto c = build_chain_complex(*x);
    const auto one = unit_cochain(*x);
    for (int p = 0; p <= x->dimension(); ++p) {
      const Cochain a{p, support::random_vector(gen, c.size(p))};
      CHECK(cup(*x, one, a).coeffs == a.coeffs);
      CHECK(cup(*x, a, one).coeffs == a.coeffs);
      const Chain s{p, support::random_vector(gen, c.size(p))};
      CHECK(cap(*x, one, s).coeffs == s.coeffs);
    }
  }
}

TEST_CASE("cap duality and associativity at chain level") {
  std::mt19937_64 gen(10);
  const auto x = catalog_complex("torus9");
  const auto c = build_chain_complex(*x);
  for (int trial = 0; trial < 20; ++trial)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; p + q <= 2; ++q) {
        const Cochain a{p, support::random_vector(gen, c.size(p))};
        const Cochain b{q, support::random_vector(gen, c.size(q))};
        const Chain s{p + q, support::random_vector(gen, c.size(p + q))};
        CHECK(evaluate(cup(*x, a, b), s) == evaluate(a, cap(*x, b, s)));
        if (p + q == 2) continue;
        const int r = 2 - p - q;
        const Cochain e{r, support::random_vector(gen, c.size(r))};
        CHECK(cup(*x, cup(*x, a, b), e).coeffs == cup(*x, a, cup(*x, b, e)).coeffs);
      }
}

TEST_CASE("torus cup products") {
  const auto f = analyze(catalog_complex("torus9"));
  const auto& co = f->cohomology;
  const auto a = basis(co, 1, 0), b = basis(co, 1, 1);
  CHECK(is_zero(cup(*f, a, a).coords));
  CHECK(is_zero(cup(*f, b, b).coords));
  const auto ab = cup(*f, a, b);
  CHECK(ab.degree == 2);
  CHECK(Rational(abs(ab.coords[0])) == 1);
  CHECK(cup(*f, b, a).coords == Rational(-1) * ab.coords);
}

TEST_CASE("octahedron: unit times top class") {
  const auto f = analyze(catalog_complex("octahedron"));
  const auto top = basis(f->cohomology, 2, 0);
  CHECK(cup(*f, basis(f->cohomology, 0, 0), top).coords == top.coords);
  CHECK(cap(*f, basis(f->cohomology, 0, 0), basis(f->homology, 2, 0)).coords == QVector{1});
}

TEST_CASE("kunneth dimensions") {
  const auto s1 = analyze(catalog_complex("hexagon"));
  const auto s1b = analyze(catalog_complex("triangle"));
  const auto s2 = analyze(catalog_complex("octahedron"));
  const auto pt = analyze(catalog_complex("point"));
  const auto tri = simplicial_product(*catalog_complex("hexagon"), *catalog_complex("triangle"));
  CHECK(product_space(s1, s1b).betti() == oracle::betti(support::maximal_names(tri)));
  CHECK(product_space(s1, s1b).betti() == std::vector<std::size_t>{1, 2, 1});
  CHECK(product_space(pt, s2).betti() == s2->homology.betti());
  CHECK(product_space(s2, s2).betti() == std::vector<std::size_t>{1, 0, 2, 0, 1});
}

TEST_CASE("cross product units and signs on the circle squared") {
  const auto x = analyze(catalog_complex("hexagon"));
  const auto pt = analyze(catalog_complex("point"));
  const auto p = product_space(x, x);
  const auto a = basis(x->cohomology, 1, 0);
  const auto one = basis(x->cohomology, 0, 0);
  const auto s = basis(x->homology, 1, 0);

  const auto unit_left = product_space(pt, x);
  const auto t = cross(unit_left, basis(pt->cohomology, 0, 0), a);
  CHECK(t.coeffs(0, 1) == 1);

  // swap of two degree-one classes
  CHECK(swap(p, cross(p, a, a)) == cross(p, a, a).scaled(Rational(-1)));
  CHECK(swap(p, cross(p, one, a)) == cross(p, a, one));

  // deg a = deg t = 1 in the Kronecker pairing gives -1
  const Rational as = kronecker(x->cohomology, a, x->homology, s);
  CHECK(kronecker_on_product(p, cross(p, a, a), cross_h(p, s, s)) == Rational(-as * as));

  // cup: units, and the sign when the inner degrees are both one
  const auto ones = cross(p, one, one);
  CHECK(cup_on_product(p, ones, cross(p, a, a)) == cross(p, a, a));
  CHECK(cup_on_product(p, cross(p, a, one), cross(p, one, a)) == cross(p, a, a));
  CHECK(cup_on_product(p, cross(p, one, a), cross(p, a, one)) == cross(p, a, a).scaled(Rational(-1)));

  // cap: sign (-1)^{|b||s|} with b = a, s of degree one
  const auto h = cap_on_product(p, cross(p, one, a), cross_h(p, s, s));
  CHECK(h == cross_h(p, s, cap(*x, a, s)).scaled(Rational(-1)));

  CHECK(diagonal_pullback(p, cross(p, one, a)) == x->cohomology.embed(a));
}

TEST_CASE("diagonal pullback matches the triangulated product at cochain level") {
  const auto xp = catalog_complex("torus7");
  const auto f = analyze(xp);
  const auto& x = *xp;
  const auto prod = std::make_shared<const SimplicialComplex>(simplicial_product(x, x));
  const int nv = static_cast<int>(x.num_vertices());
  std::vector<int> p1, p2, diag;
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      p1.push_back(i);
      p2.push_back(j);
    }
  for (int i = 0; i < nv; ++i) diag.push_back(i * nv + i);
  const auto pr1 = check_simplicial(p1, prod, xp, "p1");
  const auto pr2 = check_simplicial(p2, prod, xp, "p2");
  const auto d = check_simplicial(diag, xp, prod, "diag");
  const auto pp = product_space(f, f);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto a = basis(f->cohomology, 1, i), b = basis(f->cohomology, 1, j);
      const Cochain ca{1, f->cohomology.representative(a)}, cb{1, f->cohomology.representative(b)};
      const Cochain on_product = cup(*prod, pullback(pr1, ca), pullback(pr2, cb));
      const Cochain back = pullback(d, on_product);
      const auto direct = f->cohomology.coordinates(2, back.coeffs);
      CHECK(QVector(direct) == f->cohomology.extract(2, diagonal_pullback(pp, cross(pp, a, b))).coords);
    }
}

}  // TEST_SUITE
