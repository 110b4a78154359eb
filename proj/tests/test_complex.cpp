#include <functional>

#include "doctest.h"
#include "support.hpp"
#include "topq/error.hpp"

using namespace topq;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("face closure") {
  const auto& o = *catalog_complex("octahedron");
  CHECK(o.dimension() == 2);
  CHECK(o.f_vector() == std::vector<std::size_t>{6, 12, 8});
  const auto oracle_faces = oracle::faces(support::maximal_names(o));
  for (int d = 0; d <= 2; ++d) CHECK(o.count(d) == oracle_faces[static_cast<std::size_t>(d)].size());

  const auto v = validate(RawComplex{"v", {"v"}, {{"v"}}, std::nullopt});
  CHECK(v.dimension() == 0);
  CHECK(v.f_vector() == std::vector<std::size_t>{1});
}

TEST_CASE("validation errors") {
  CHECK(kind_of([] { validate(RawComplex{"bad", {"a", "b"}, {{"a", "a", "b"}}, std::nullopt}); }) ==
        ErrorKind::DuplicateVertex);
  CHECK(kind_of([] { validate(RawComplex{"bad", {"a", "b"}, {{"a", "c"}}, std::nullopt}); }) ==
        ErrorKind::UnknownVertex);
  CHECK(kind_of([] { validate(RawComplex{"bad", {"a", "a"}, {{"a"}}, std::nullopt}); }) ==
        ErrorKind::DuplicateVertex);
}

TEST_CASE("vertex order is respected") {
  const auto x = validate(RawComplex{"e", {"a", "b"}, {{"b", "a"}}, std::vector<std::string>{"b", "a"}});
  CHECK(x.vertex_name(0) == "b");
  CHECK(x.label(x.simplex(1, 0)) == "[b,a]");
}

TEST_CASE("re-validating the maximal simplices is idempotent") {
  for (const auto& c : catalog_complexes()) {
    const auto& x = *c.complex;
    RawComplex raw{x.name(), x.vertex_names(), support::maximal_names(x), x.vertex_names()};
    const auto y = validate(raw);
    for (int d = 0; d <= x.dimension(); ++d) CHECK(y.simplices(d) == x.simplices(d));
  }
}

TEST_CASE("simplicial maps") {
  const auto hex = catalog_complex("hexagon");
  const auto tri = catalog_complex("triangle");
  std::map<std::string, std::string> wrap, flat;
  for (int i = 0; i < 6; ++i) {
    wrap["v" + std::to_string(i)] = "w" + std::to_string(i % 3);
    flat["v" + std::to_string(i)] = "w0";
  }
  CHECK_NOTHROW(check_simplicial(wrap, hex, tri));
  CHECK(check_simplicial(flat, hex, tri).image(hex->simplex(1, 0)) == Simplex{0});
  std::map<std::string, std::string> skip;
  for (int i = 0; i < 6; ++i) skip["v" + std::to_string(i)] = "v" + std::to_string((2 * i) % 6);
  CHECK(kind_of([&] { check_simplicial(skip, hex, hex); }) == ErrorKind::NotSimplicial);
  std::map<std::string, std::string> partial{{"v0", "w0"}};
  CHECK_THROWS_AS(check_simplicial(partial, hex, tri), Error);
}

TEST_CASE("manifold checks") {
  const auto m = manifold_check(*catalog_complex("octahedron"));
  CHECK(m.closed_manifold_candidate());
  CHECK(m.dimension == 2);
  const auto d = manifold_check(*catalog_complex("disk"));
  CHECK_FALSE(d.closed_pseudomanifold);
  CHECK(d.boundary_faces == 3);
  CHECK(manifold_check(*catalog_complex("point")).closed_manifold_candidate());
  for (const auto& name : catalog_manifolds()) CHECK(manifold_check(*catalog_complex(name)).closed_manifold_candidate());
}

TEST_CASE("orientation") {
  const auto o = orient(*catalog_complex("octahedron"));
  CHECK(o.signs.size() == 8);
  CHECK(o.coherent);
  CHECK(is_coherent(*catalog_complex("octahedron"), o.signs));
  auto flipped = o.signs;
  flipped[0] = -flipped[0];
  CHECK_FALSE(is_coherent(*catalog_complex("octahedron"), flipped));
  CHECK(orient(*catalog_complex("hexagon")).coherent);
  CHECK(orient(*catalog_complex("octahedron")).signs == o.signs);
  CHECK(kind_of([] { orient(*catalog_complex("rp2")); }) == ErrorKind::NonOrientable);
  CHECK(kind_of([] { orient(*catalog_complex("disk")); }) == ErrorKind::NotClosed);
}

TEST_CASE("barycentric subdivision") {
  const auto disk = barycentric_subdivide(*catalog_complex("disk"));
  CHECK(disk.complex.f_vector() == std::vector<std::size_t>{7, 12, 6});
  CHECK(barycentric_subdivide(*catalog_complex("point")).complex.f_vector() == std::vector<std::size_t>{1});
  CHECK(barycentric_subdivide(*catalog_complex("hexagon")).complex.f_vector() == std::vector<std::size_t>{12, 12});
  for (const auto& c : catalog_complexes()) {
    const auto sd = barycentric_subdivide(*c.complex);
    CHECK(sd.complex.euler_characteristic() == oracle::euler(support::maximal_names(*c.complex)));
    CHECK(sd.provenance.size() == sd.complex.num_vertices());
  }
}

TEST_CASE("geometric points") {
  CHECK(GeometricPoint{{0, 1}, {make_rational(1, 3), make_rational(2, 3)}}.valid());
  CHECK_FALSE(GeometricPoint{{0, 1}, {make_rational(1, 3), make_rational(1, 3)}}.valid());
  CHECK_FALSE(GeometricPoint{{0, 1}, {Rational(2), Rational(-1)}}.valid());
}

TEST_CASE("simplicial products") {
  const auto sq = simplicial_product(*catalog_complex("interval"), *catalog_complex("interval"));
  CHECK(sq.f_vector() == std::vector<std::size_t>{4, 5, 2});
  const auto t = simplicial_product(*catalog_complex("hexagon"), *catalog_complex("triangle"));
  CHECK(t.f_vector() == std::vector<std::size_t>{18, 54, 36});
  CHECK(oracle::betti(support::maximal_names(t)) == std::vector<std::size_t>{1, 2, 1});
  CHECK(manifold_check(t).closed_manifold_candidate());
}

}  // TEST_SUITE
