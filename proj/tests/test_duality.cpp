#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "topq/duality.hpp"
#include "topq/error.hpp"

using namespace topq;

namespace {

ManifoldMap mmap(const std::string& name) {
  const auto& f = catalog_map(name);
  return make_manifold_map(f, prepare_manifold(f.domain), prepare_manifold(f.codomain));
}

// Signed count of top simplices of X mapped onto the top simplex `target` of Y.
long preimage_count(const SimplicialMap& f, const OrientationData& ox, const OrientationData& oy, std::size_t target) {
  const auto& x = *f.domain;
  const auto& y = *f.codomain;
  const int n = x.dimension();
  const Simplex& t = y.simplex(n, target);
  long total = 0;
  for (std::size_t i = 0; i < x.count(n); ++i) {
    std::vector<int> image;
    for (int v : x.simplex(n, i)) image.push_back(f.vertex_map[static_cast<std::size_t>(v)]);
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != t) continue;
    total += ox.signs[i] * oy.signs[target] * oracle::permutation_sign(image);
  }
  return total;
}

}  // namespace

TEST_SUITE("duality") {

TEST_CASE("fundamental cycles") {
  for (const char* name : {"octahedron", "hexagon", "torus9", "genus2"}) {
    const auto m = prepare_manifold(catalog_complex(name));
    const auto& c = m->factor->chains;
    CAPTURE(name);
    CHECK(is_zero(c.d(m->n).apply(m->zeta.cycle.coeffs)));
    std::size_t nonzero = 0;
    for (const auto& q : m->zeta.cycle.coeffs) {
      CHECK((q == 1 || q == -1));
      nonzero += 1;
    }
    CHECK(nonzero == c.size(m->n));
  }
  CHECK(prepare_manifold(catalog_complex("octahedron"))->zeta.cycle.coeffs.size() == 8);
  CHECK(prepare_manifold(catalog_complex("hexagon"))->zeta.cycle.coeffs.size() == 6);
}

TEST_CASE("closedness and orientability are enforced") {
  auto kind = [](const char* name) {
    try {
      (void)prepare_manifold(catalog_complex(name));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind("rp2") == ErrorKind::NonOrientable);
  CHECK(kind("disk") == ErrorKind::NotClosed);
  CHECK(kind("interval") == ErrorKind::NotClosed);
}

TEST_CASE("duality operator") {
  for (const auto& name : catalog_manifolds()) {
    const auto m = prepare_manifold(catalog_complex(name));
    CAPTURE(name);
    CHECK(m->d[0].column(0) == m->zeta.cls.coords);
    for (int q = 0; q <= m->n; ++q) {
      const auto& blk = m->d[static_cast<std::size_t>(q)];
      CHECK(blk.rows() == blk.cols());
      REQUIRE(blk.inverse().has_value());
      CHECK(*blk.inverse() == m->d_inv[static_cast<std::size_t>(m->n - q)]);
    }
  }
  const auto t = prepare_manifold(catalog_complex("torus"));
  CHECK(t->d[1].rows() == 2);
  CHECK(t->d[1].inverse().has_value());
}

TEST_CASE("dual bases") {
  for (const auto& name : catalog_manifolds()) {
    const auto m = prepare_manifold(catalog_complex(name));
    CAPTURE(name);
    for (int p = 0; p <= m->n; ++p)
      for (std::size_t i = 0; i < m->cohomology().dim(p); ++i)
        for (std::size_t j = 0; j < m->cohomology().dim(m->n - p); ++j) {
          const Rational v =
              poincare_pairing(*m, dual_basis_class(*m, p, i), m->cohomology().basis_class(m->n - p, j));
          CHECK(v == (i == j ? 1 : 0));
        }
  }
  const auto o = prepare_manifold(catalog_complex("octahedron"));
  CHECK(poincare_pairing(*o, dual_basis_class(*o, 2, 0), o->cohomology().basis_class(0, 0)) == 1);
}

TEST_CASE("degree against signed preimage counts") {
  for (const auto& cm : catalog_maps()) {
    const auto& f = cm.map;
    if (f.domain->dimension() != f.codomain->dimension()) continue;
    bool manifold = false;
    for (const auto& n : catalog_manifolds()) manifold |= (n == f.domain->name());
    bool target = false;
    for (const auto& n : catalog_manifolds()) target |= (n == f.codomain->name());
    if (!manifold || !target || f.domain->dimension() == 0) continue;
    CAPTURE(cm.name);
    const auto ox = orient(*f.domain);
    const auto oy = orient(*f.codomain);
    const long expected = preimage_count(f, ox, oy, 0);
    for (std::size_t t = 1; t < f.codomain->count(f.codomain->dimension()); ++t)
      CHECK(preimage_count(f, ox, oy, t) == expected);
    CHECK(degree(mmap(cm.name)) == expected);
  }
  CHECK(degree(mmap("id_torus9")) == 1);
  CHECK(degree(mmap("wrap2")) == 2);
  CHECK(degree(mmap("wrap1")) == 1);
  CHECK(degree(mmap("const_w0")) == 0);
  CHECK(degree(mmap("octa_antipodal")) == -1);
  CHECK(degree(mmap("octa_fold")) == 0);
  CHECK(degree(mmap("hex_refl")) == -1);
}

TEST_CASE("transfers") {
  const auto w = transfers(mmap("wrap2"));
  CHECK(w.shift == 0);
  CHECK(w.cohomology.block(0) == QMatrix::from_columns(1, {QVector{2}}));
  for (const char* name : {"id_octahedron", "id_torus9", "id_hexagon"}) {
    const auto f = mmap(name);
    const auto t = transfers(f);
    CHECK(t.cohomology == identity_graded(f.x->cohomology()));
    CHECK(t.homology == identity_graded(f.x->homology()));
  }
  // f_* f_! = deg . id on homology of the target
  const auto f = mmap("wrap2");
  const auto comp = compose(f.push, w.homology);
  for (int k = 0; k <= 1; ++k) CHECK(comp.block(k) == QMatrix::identity(comp.block(k).rows()).scaled(Rational(2)));
}

TEST_CASE("intersection products on the torus") {
  const auto m = prepare_manifold(catalog_complex("torus"));
  const auto& h = m->homology();
  const auto z = m->zeta.cls;
  const auto a = h.basis_class(1, 0), b = h.basis_class(1, 1);
  CHECK(intersection(*m, z, a).coords == a.coords);
  CHECK(intersection(*m, a, z).coords == a.coords);
  CHECK(intersection(*m, z, z).coords == z.coords);
  const auto ab = intersection(*m, a, b);
  CHECK(ab.degree == 0);
  CHECK(Rational(abs(ab.coords[0])) == 1);
  CHECK(intersection(*m, b, a).coords == Rational(-1) * ab.coords);
  CHECK(is_zero(intersection(*m, a, a).coords));
}

TEST_CASE("product duality agrees factorwise") {
  const auto x = prepare_manifold(catalog_complex("hexagon"));
  const auto y = prepare_manifold(catalog_complex("octahedron"));
  const auto p = manifold_product(*x, *y);
  for (std::size_t i = 0; i < x->cohomology().total_dim(); ++i)
    for (std::size_t j = 0; j < y->cohomology().total_dim(); ++j) {
      const auto t = cross_total(p, Variance::Cohomology, unit_vector(x->cohomology().total_dim(), i),
                                 unit_vector(y->cohomology().total_dim(), j));
      const auto d = product_duality(p, *x, *y, t);
      CHECK(d == product_duality_factorwise(p, *x, *y, t));
      CHECK(product_duality_inverse(p, *x, *y, d) == t);
    }
}

}  // TEST_SUITE
