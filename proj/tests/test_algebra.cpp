#include <random>

#include "doctest.h"
#include "support.hpp"
#include "topq/error.hpp"
#include "topq/linalg.hpp"
#include "topq/lp.hpp"

using namespace topq;

TEST_SUITE("algebra") {

TEST_CASE("rationals print as p/q and parse back") {
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("canonical form reconstructs inputs exactly") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    long p = d(gen), q = d(gen);
    if (q == 0) q = 1;
    const Rational r = make_rational(p, q);
    CHECK(r * Rational(q) == Rational(p));
    CHECK(parse_rational(to_string(r)) == r);
  }
}

SparseMatrix edge_boundary() {
  // edges [0,1], [0,2], [1,2] of a triangle
  SparseMatrix m(3, 3);
  m.set(0, 0, -1); m.set(1, 0, 1);
  m.set(0, 1, -1); m.set(2, 1, 1);
  m.set(1, 2, -1); m.set(2, 2, 1);
  return m;
}

TEST_CASE("rank and kernel of small matrices") {
  CHECK(rank(edge_boundary()) == 2);
  CHECK(kernel_basis(edge_boundary()).size() == 1);
  CHECK(rank(SparseMatrix(3, 4)) == 0);
  CHECK(rank(SparseMatrix::identity(4)) == 4);
  CHECK(kernel_basis(SparseMatrix::identity(4)).empty());
  SparseMatrix ones(1, 3);
  for (std::size_t c = 0; c < 3; ++c) ones.set(0, c, 1);
  CHECK(kernel_basis(ones).size() == 2);
}

TEST_CASE("solve: identity, inconsistent, homogeneous") {
  const QVector b{1, -2, make_rational(1, 3), 5};
  CHECK(*solve(SparseMatrix::identity(4), b) == b);
  CHECK_FALSE(solve(SparseMatrix(2, 2), QVector{1, 0}).has_value());
  const auto zero = solve(edge_boundary(), QVector(3, Rational(0)));
  REQUIRE(zero.has_value());
  CHECK(is_zero(*zero));
}

TEST_CASE("rank-nullity, kernel and solve on random matrices") {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> dim(1, 7), sparse(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = dim(gen), c = dim(gen);
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (sparse(gen) == 0) m.set(i, j, support::random_vector(gen, 1)[0]);
    const std::size_t rk = rank(m);
    const auto ker = kernel_basis(m);
    CHECK(rk + ker.size() == c);
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    // the dense oracle agrees on the rank
    std::vector<std::vector<mpq_class>> dense(r, std::vector<mpq_class>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) dense[i][j] = m.get(i, j);
    CHECK(oracle::dense_rank(dense) == rk);
    const QVector x = support::random_vector(gen, c);
    const QVector b = m.apply(x);
    const auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
}

TEST_CASE("span reducer and dense inverse") {
  SpanReducer s(3);
  CHECK(s.add(QVector{1, 1, 0}));
  CHECK(s.add(QVector{0, 1, 1}));
  CHECK_FALSE(s.add(QVector{1, 2, 1}));
  CHECK(s.contains(QVector{2, 3, 1}));
  QMatrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 1;
  const auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(a * *inv == QMatrix::identity(2));
  QMatrix singular(2, 2);
  singular(0, 0) = 1; singular(0, 1) = 2; singular(1, 0) = 2; singular(1, 1) = 4;
  CHECK_FALSE(singular.inverse().has_value());
  CHECK(singular.rank() == 1);
}

TEST_CASE("exact feasibility") {
  LinearSystem box{1, {{{1}, Relation::GreaterEqual, 0}, {{1}, Relation::LessEqual, 1}}, {}};
  const auto x = lp_feasible(box);
  REQUIRE(x.has_value());
  CHECK(satisfies(box, *x));
  LinearSystem empty{1, {{{1}, Relation::GreaterEqual, 1}, {{1}, Relation::LessEqual, 0}}, {}};
  CHECK_FALSE(lp_feasible(empty).has_value());
  // barycentric triangle cut by t0 = t1, t2 = 0
  LinearSystem tri{3,
                   {{{1, 1, 1}, Relation::Equal, 1}, {{1, -1, 0}, Relation::Equal, 0}, {{0, 0, 1}, Relation::Equal, 0}},
                   {true, true, true}};
  const auto p = lp_feasible(tri);
  REQUIRE(p.has_value());
  CHECK(*p == QVector{make_rational(1, 2), make_rational(1, 2), 0});
}

}  // TEST_SUITE
