#pragma once

#include <memory>
#include <vector>

#include "topq/homology.hpp"

namespace topq {

// Alexander-Whitney cup: (a u b)[v0..v_{p+q}] = a[v0..vp] * b[vp..v_{p+q}].
Cochain cup(const SimplicialComplex& x, const Cochain& a, const Cochain& b);
// Cap of b in C^p with a chain of degree k:
//   b n [v0..vk] = b[v_{k-p}..vk] * [v0..v_{k-p}].
// With this convention (a u b, s) = (a, b n s) holds exactly on chains.
Chain cap(const SimplicialComplex& x, const Cochain& b, const Chain& s);
Cochain unit_cochain(const SimplicialComplex& x);
Rational evaluate(const Cochain& a, const Chain& s);

// A complex with its chain complex, homology and cohomology, and the cup and
// cap structure constants on the total bases.
struct Factor {
  ComplexPtr complex;
  ChainComplex chains;
  GradedSpace homology;
  GradedSpace cohomology;
  // cup_table[i][k] = total coordinates of e_i u e_k.
  std::vector<std::vector<QVector>> cup_table;
  // cap_table[i][j] = total homology coordinates of e_i n s_j (zero when deg e_i > deg s_j).
  std::vector<std::vector<QVector>> cap_table;
  // pairing(i, j) = (e_i, s_j) for total bases; zero across different degrees.
  QMatrix pairing;
  // unit class 1 in H^0 (total coordinates), zero if the complex is empty
  QVector unit;

  int cdeg(std::size_t i) const { return cohomology.degree_of(i); }
  int hdeg(std::size_t j) const { return homology.degree_of(j); }
};

using FactorPtr = std::shared_ptr<const Factor>;

FactorPtr analyze(const ComplexPtr& x);

HClass cup(const Factor& f, const HClass& a, const HClass& b);
HClass cap(const Factor& f, const HClass& a, const HClass& s);
// Total-basis versions, extended bilinearly across degrees.
QVector cup_total(const Factor& f, const QVector& a, const QVector& b);
QVector cap_total(const Factor& f, const QVector& a, const QVector& s);

// A class of X x Y in the Kunneth model: coefficient of e_i x f_j at (i, j)
// over the total bases of the factors.
struct TensorClass {
  Variance variance = Variance::Cohomology;
  QMatrix coeffs;

  bool operator==(const TensorClass&) const = default;
  TensorClass operator+(const TensorClass& o) const { return TensorClass{variance, coeffs + o.coeffs}; }
  TensorClass operator-(const TensorClass& o) const { return TensorClass{variance, coeffs - o.coeffs}; }
  TensorClass scaled(const Rational& s) const { return TensorClass{variance, coeffs.scaled(s)}; }
  bool is_zero() const { return coeffs.is_zero(); }
};

struct ProductSpace {
  FactorPtr x;
  FactorPtr y;

  std::vector<std::size_t> betti() const;
  TensorClass zero(Variance v) const;
  // Total degree of a homogeneous class; -1 for the zero class; throws if mixed.
  int degree(const TensorClass& t) const;
};

ProductSpace product_space(FactorPtr x, FactorPtr y);

TensorClass cross(const ProductSpace& p, const HClass& a, const HClass& b);
TensorClass cross_h(const ProductSpace& p, const HClass& s, const HClass& t);
TensorClass cross_total(const ProductSpace& p, Variance v, const QVector& a, const QVector& b);

// (a x b) u (c x d) = (-1)^{|b||c|} (a u c) x (b u d).
TensorClass cup_on_product(const ProductSpace& p, const TensorClass& s, const TensorClass& t);
// (a x b) n (s x t) = (-1)^{|b||s|} (a n s) x (b n t).
TensorClass cap_on_product(const ProductSpace& p, const TensorClass& c, const TensorClass& h);
// (a x b, s x t) = (-1)^{|t||a|} (a, s)(b, t).
Rational kronecker_on_product(const ProductSpace& p, const TensorClass& c, const TensorClass& h);
// Delta^*(a x b) = a u b, for p with x == y.
QVector diagonal_pullback(const ProductSpace& p, const TensorClass& t);
// t : X x Y -> Y x X; t_*(a x b) = (-1)^{|a||b|} b x a. The result lives on (y, x).
TensorClass swap(const ProductSpace& p, const TensorClass& t);
// Degree-preserving factorwise map: (F x G)(a x b) = F a x G b with total matrices F, G.
TensorClass apply_factorwise(const QMatrix& f, const QMatrix& g, const TensorClass& t);

}  // namespace topq
