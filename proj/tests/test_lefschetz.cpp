#include <map>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "topq/lefschetz.hpp"

using namespace topq;

namespace {

ManifoldMap mmap(const std::string& name) {
  const auto& f = catalog_map(name);
  return make_manifold_map(f, prepare_manifold(f.domain), prepare_manifold(f.codomain));
}

Rational lambda(const std::string& f, const std::string& g) { return coincidence_number(mmap(f), mmap(g)).lambda; }

Rational det2(const QMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// |f|(x) for a point of the domain given by barycentric coordinates on `carrier`.
QVector realize(const SimplicialMap& f, const Simplex& carrier, const QVector& coords) {
  QVector out(f.codomain->num_vertices(), Rational(0));
  for (std::size_t i = 0; i < carrier.size(); ++i)
    out[static_cast<std::size_t>(f.vertex_map[static_cast<std::size_t>(carrier[i])])] += coords[i];
  return out;
}

}  // namespace

TEST_SUITE("lefschetz") {

TEST_CASE("circle: lambda = deg g - deg f") {
  const char* maps[] = {"wrap2", "wrap1", "const_w0", "const_w1", "wrap2_refl", "wrap1_rot"};
  for (const char* f : maps)
    for (const char* g : maps) {
      CAPTURE(f);
      CAPTURE(g);
      CHECK(lambda(f, g) == degree(mmap(g)) - degree(mmap(f)));
    }
  CHECK(lambda("wrap2", "wrap1") == -1);
  CHECK(lambda("const_w0", "const_w1") == 0);
}

TEST_CASE("sphere: lambda = deg g + deg f") {
  const char* maps[] = {"id_octahedron", "octa_rot", "octa_antipodal", "octa_fold", "octa_const"};
  for (const char* f : maps)
    for (const char* g : maps) {
      CAPTURE(f);
      CAPTURE(g);
      CHECK(lambda(f, g) == degree(mmap(g)) + degree(mmap(f)));
    }
  CHECK(lambda("octa_antipodal", "id_octahedron") == 0);
}

TEST_CASE("torus: lambda = det(G - F) on H_1") {
  const char* maps[] = {"id_torus9", "torus_shift", "torus_swap", "torus_neg", "torus_proj", "torus_const"};
  for (const char* f : maps)
    for (const char* g : maps) {
      CAPTURE(f);
      CAPTURE(g);
      const auto fm = mmap(f), gm = mmap(g);
      CHECK(lambda(f, g) == det2(gm.push.block(1) - fm.push.block(1)));
    }
  CHECK(lambda("torus_neg", "id_torus9") == 4);
}

TEST_CASE("lambda(f, id) is the Lefschetz number") {
  for (const auto& cm : catalog_maps()) {
    const auto& f = cm.map;
    if (f.domain != f.codomain) continue;
    bool manifold = false;
    for (const auto& n : catalog_manifolds()) manifold |= (n == f.domain->name());
    if (!manifold) continue;
    CAPTURE(cm.name);
    const auto fm = mmap(cm.name);
    Rational l = 0;
    for (int p = 0; p <= fm.x->n; ++p) l += sign_of_parity(p) * fm.push.block(p).trace();
    CHECK(coincidence_number(fm, mmap("id_" + f.domain->name())).lambda == l);
  }
}

TEST_CASE("Lefschetz class and Euler data") {
  const std::map<std::string, long> chi{{"point", 1},  {"hexagon", 0}, {"triangle", 0}, {"octahedron", 2},
                                        {"icosahedron", 2}, {"torus9", 0}, {"torus7", 0}, {"genus2", -2}};
  for (const auto& name : catalog_manifolds()) {
    const auto m = prepare_manifold(catalog_complex(name));
    CAPTURE(name);
    const auto l = lefschetz_class(m);
    CHECK(l.extraction_matches());
    const auto e = euler_data(m);
    CHECK(e.consistent());
    CHECK(e.euler_number == chi.at(name));
    CHECK(e.combinatorial == oracle::euler(support::maximal_names(*m->factor->complex)));
    CHECK(lambda("id_" + name, "id_" + name) == chi.at(name));
    // identity: lambda_X(1) = (-1)^n Lambda_X, Tr = chi
    const auto iso = lefschetz_iso(*m, l.space, identity_hom(*m));
    CHECK(iso == l.value.scaled(Rational(sign_of_parity(m->n))));
    CHECK(graded_trace(identity_hom(*m)) == chi.at(name));
  }
  const auto hex = prepare_manifold(catalog_complex("hexagon"));
  const auto lh = lefschetz_class(hex);
  CHECK(lefschetz_iso(*hex, lh.space, identity_hom(*hex)) == lh.value.scaled(Rational(-1)));
}

TEST_CASE("trace formula for endomorphisms of cohomology") {
  std::mt19937_64 gen(21);
  for (const char* name : {"hexagon", "octahedron", "torus9", "genus2"}) {
    const auto m = prepare_manifold(catalog_complex(name));
    const auto xx = product_space(m->factor, m->factor);
    CAPTURE(name);
    LefschetzHom zero = identity_hom(*m);
    for (auto& b : zero) b = b.scaled(Rational(0));
    CHECK(graded_trace(zero) == 0);
    CHECK(diagonal_trace(*m, xx, lefschetz_iso(*m, xx, zero)) == 0);
    for (int trial = 0; trial < 5; ++trial) {
      LefschetzHom s = identity_hom(*m);
      for (auto& b : s)
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = support::random_vector(gen, 1)[0];
      CHECK(diagonal_trace(*m, xx, lefschetz_iso(*m, xx, s)) == graded_trace(s));
    }
  }
  const auto t = prepare_manifold(catalog_complex("torus"));
  const auto tt = product_space(t->factor, t->factor);
  LefschetzHom proj = identity_hom(*t);
  proj[0] = proj[0].scaled(Rational(0));
  proj[2] = proj[2].scaled(Rational(0));
  proj[1](1, 1) = 0;
  CHECK(graded_trace(proj) == -1);
  CHECK(diagonal_trace(*t, tt, lefschetz_iso(*t, tt, proj)) == -1);
}

TEST_CASE("coincidence routes, antisymmetry and degree scaling") {
  for (const auto& pr : catalog_coincidence_pairs()) {
    CAPTURE(pr.f);
    CAPTURE(pr.g);
    const auto r = coincidence_number(mmap(pr.f), mmap(pr.g));
    CHECK(r.consistent());
    CHECK(lambda(pr.g, pr.f) == r.sign_n * r.lambda);
  }
  // h = hex_refl has degree -1
  CHECK(lambda("wrap2_refl", "wrap1_refl") == -lambda("wrap2", "wrap1"));
  CHECK(lambda("wrap2_rot", "wrap1_rot") == lambda("wrap2", "wrap1"));
}

TEST_CASE("witness search") {
  const auto& f = catalog_map("wrap2");
  const auto& g = catalog_map("wrap1");
  const auto w = coincidence_witness(f, g, 3, true);
  REQUIRE(w.status == WitnessStatus::Found);
  CHECK(realize(f, w.base_carrier, w.base_coords) == realize(g, w.base_carrier, w.base_coords));
  CHECK(realize(f, w.base_carrier, w.base_coords) == w.image);
  Rational total = 0;
  for (const auto& c : w.base_coords) {
    CHECK(c >= 0);
    total += c;
  }
  CHECK(total == 1);
  CHECK(verify_witness(f, g, w.base_carrier, w.base_coords));

  const auto& id = catalog_map("id_octahedron");
  const auto wi = coincidence_witness(id, id, 3, true);
  CHECK(wi.status == WitnessStatus::Found);
  CHECK(wi.level == 0);
  CHECK(wi.base_carrier.size() == 1);

  const auto wc = coincidence_witness(catalog_map("const_w0"), catalog_map("const_w1"), 3, false);
  CHECK(wc.status == WitnessStatus::NoneLambdaZero);
  CHECK(std::string(to_string(WitnessStatus::NoneLambdaZero)) == "none-lambda-zero-no-claim");
}

}  // TEST_SUITE
