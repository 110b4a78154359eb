#include <random>

#include "doctest.h"
#include "support.hpp"
#include "topq/chains.hpp"
#include "topq/error.hpp"
#include "topq/linalg.hpp"

using namespace topq;

namespace {

QVector column(const SparseMatrix& m, std::size_t c) {
  QVector v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.get(r, c);
  return v;
}

Chain basis_chain(const ChainComplex& c, const SimplicialComplex& x, const Simplex& s) {
  const int k = static_cast<int>(s.size()) - 1;
  Chain z{k, QVector(c.size(k), Rational(0))};
  z.coeffs[*x.index_of(s)] = 1;
  return z;
}

}  // namespace

TEST_SUITE("chains") {

TEST_CASE("boundary of an edge and of a point") {
  const auto x = catalog_complex("interval");
  const auto c = build_chain_complex(*x);
  CHECK(column(c.d(1), 0) == QVector{-1, 1});
  const auto p = build_chain_complex(*catalog_complex("point"));
  CHECK(p.d(0).rows() == 0);
  CHECK(p.d(1).is_zero());
}

TEST_CASE("boundary squared vanishes") {
  const auto o = build_chain_complex(*catalog_complex("octahedron"));
  CHECK((o.d(1) * o.d(2)).is_zero());
  CHECK((o.coboundary(1) * o.coboundary(0)).is_zero());
}

TEST_CASE("relative complexes") {
  const auto disk = catalog_complex("disk");
  const auto& x = *disk;
  const auto sub = make_subcomplex(
      disk, {support::simplex(x, {"d0", "d1"}), support::simplex(x, {"d1", "d2"}), support::simplex(x, {"d0", "d2"})},
      "boundary");
  const auto rel = build_relative(sub.inclusion);
  CHECK(rel.quotient.size(0) == 0);
  CHECK(rel.quotient.size(1) == 0);
  CHECK(rel.quotient.size(2) == 1);
  CHECK(rel.quotient.d(2).is_zero());

  const auto whole = make_subcomplex(disk, {support::simplex(x, {"d0", "d1", "d2"})}, "all");
  const auto none = build_relative(whole.inclusion);
  for (int m = 0; m <= 2; ++m) CHECK(none.quotient.size(m) == 0);
}

TEST_CASE("short exact sequence of chain groups") {
  const auto octa = catalog_complex("octahedron");
  const auto sub = make_subcomplex(octa, {support::simplex(*octa, {"n", "a", "b"})}, "cap");
  const auto rel = build_relative(sub.inclusion);
  const auto inc = rel.inclusion_map();
  const auto proj = rel.projection();
  for (int m = 0; m <= 2; ++m) {
    const auto i = static_cast<std::size_t>(m);
    CHECK(rank(inc[i]) == rel.sub.size(m));
    CHECK(rank(proj[i]) == rel.quotient.size(m));
    CHECK((proj[i] * inc[i]).is_zero());
    CHECK(rel.sub.size(m) + rel.quotient.size(m) == rel.ambient.size(m));
  }
}

TEST_CASE("induced chain maps") {
  const auto& id = catalog_map("id_hexagon");
  const auto idm = induced_chain_map(id);
  CHECK(idm[0] == SparseMatrix::identity(6));
  CHECK(idm[1] == SparseMatrix::identity(6));
  CHECK(induced_chain_map(catalog_map("hex_const0"))[1].is_zero());

  const auto& wrap = catalog_map("wrap2");
  const auto w = induced_chain_map(wrap);
  for (std::size_t e = 0; e < 6; ++e) {
    const auto col = column(w[1], e);
    int nonzero = 0;
    for (const auto& v : col)
      if (v != 0) {
        ++nonzero;
        CHECK(abs(v) == 1);
      }
    CHECK(nonzero == 1);
  }
  CHECK(is_chain_map(build_chain_complex(*wrap.domain), build_chain_complex(*wrap.codomain), w));
}

TEST_CASE("cones") {
  const auto disk = catalog_complex("disk");
  const auto& x = *disk;
  const auto c = build_chain_complex(x);
  const auto d0 = *x.vertex_index("d0"), d2 = *x.vertex_index("d2");
  const auto e01 = cone(x, d0, basis_chain(c, x, support::simplex(x, {"d1"})));
  CHECK(e01.coeffs == basis_chain(c, x, support::simplex(x, {"d0", "d1"})).coeffs);
  const auto e02 = cone(x, d2, basis_chain(c, x, support::simplex(x, {"d0"})));
  CHECK(e02.coeffs == Rational(-1) * basis_chain(c, x, support::simplex(x, {"d0", "d2"})).coeffs);
  CHECK(is_zero(cone(x, d0, Chain{0, QVector(3, Rational(0))}).coeffs));
  const auto full = cone(x, d0, basis_chain(c, x, support::simplex(x, {"d1", "d2"})));
  CHECK(full.coeffs == QVector{1});

  const auto hex = catalog_complex("hexagon");
  const auto hc = build_chain_complex(*hex);
  CHECK_THROWS_AS(cone(*hex, 0, basis_chain(hc, *hex, support::simplex(*hex, {"v2"}))), Error);
}

TEST_CASE("cone boundary formula on admissible chains") {
  std::mt19937_64 gen(5);
  const auto octa = catalog_complex("octahedron");
  const auto& x = *octa;
  const auto c = build_chain_complex(x);
  const int p = *x.vertex_index("n");
  // edges of the link of n plus edges through n
  for (int trial = 0; trial < 20; ++trial) {
    Chain z{1, QVector(c.size(1), Rational(0))};
    const auto r = support::random_vector(gen, c.size(1));
    for (std::size_t i = 0; i < c.size(1); ++i) {
      Simplex s = x.simplex(1, i);
      bool has = s[0] == p || s[1] == p;
      s.push_back(p);
      sort_sign(s);
      if (has || x.contains(s)) z.coeffs[i] = r[i];
    }
    const auto lhs = boundary_of(c, cone(x, p, z));
    const auto rhs = z.coeffs - cone(x, p, boundary_of(c, z)).coeffs;
    CHECK(lhs.coeffs == rhs);
  }
}

TEST_CASE("subdivision chain map") {
  const auto iv = catalog_complex("interval");
  const auto sd = barycentric_subdivide(*iv);
  const auto m = subdivision_chain_map(*iv, sd);
  const auto img = column(m[1], 0);
  int terms = 0;
  for (const auto& v : img) terms += v != 0;
  CHECK(terms == 2);
  CHECK(column(m[0], 0) == unit_vector(3, static_cast<std::size_t>(sd.barycenter.at(Simplex{0}))));
  CHECK(is_chain_map(build_chain_complex(*iv), build_chain_complex(sd.complex), m));

  const auto disk = catalog_complex("disk");
  const auto sdd = barycentric_subdivide(*disk);
  const auto md = subdivision_chain_map(*disk, sdd);
  const auto tri = column(md[2], 0);
  int nonzero = 0;
  for (const auto& v : tri)
    if (v != 0) {
      ++nonzero;
      CHECK(abs(v) == 1);
    }
  CHECK(nonzero == 6);
  CHECK(is_chain_map(build_chain_complex(*disk), build_chain_complex(sdd.complex), md));
}

}  // TEST_SUITE
