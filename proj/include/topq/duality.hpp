#pragma once

#include <memory>
#include <vector>

#include "topq/products.hpp"

namespace topq {

struct FundamentalClass {
  Chain cycle;  // signed sum of the top simplices
  HClass cls;
};

// Throws NotClosed or NonOrientable (through orient), and HypothesisViolated
// when H_n is not one-dimensional.
FundamentalClass fundamental_class(const Factor& f, const OrientationData& orientation);

// A closed, connected, oriented complex with its duality data.
struct Manifold {
  FactorPtr factor;
  int n = 0;
  OrientationData orientation;
  FundamentalClass zeta;
  // d[q] : H^q -> H_{n-q}, a -> a n zeta; d_inv[k] : H_k -> H^{n-k}.
  std::vector<QMatrix> d;
  std::vector<QMatrix> d_inv;
  // dual[p]: column i holds the H^p coordinates of bhat_i, where
  // <bhat_i, b_j> = (bhat_i u b_j, zeta) = delta_ij and b_j is the j-th basis class of H^{n-p}.
  std::vector<QMatrix> dual;

  const std::string& name() const { return factor->complex->name(); }
  const GradedSpace& homology() const { return factor->homology; }
  const GradedSpace& cohomology() const { return factor->cohomology; }
};

using ManifoldPtr = std::shared_ptr<const Manifold>;

// Orients, builds the fundamental class, duality operator and dual bases.
ManifoldPtr prepare_manifold(const FactorPtr& f);
ManifoldPtr prepare_manifold(const ComplexPtr& x);

// Per-degree matrices of cap with zeta. Throws SingularDuality.
std::vector<QMatrix> duality_operator(const Factor& f, const HClass& zeta);
// Inverts the cup pairing H^p x H^{n-p} -> Q. Throws SingularPairing.
std::vector<QMatrix> dual_basis(const Factor& f, const HClass& zeta);

HClass duality(const Manifold& m, const HClass& a);
HClass duality_inverse(const Manifold& m, const HClass& s);
// <x, y> = (x u y, zeta).
Rational poincare_pairing(const Manifold& m, const HClass& x, const HClass& y);
// a . b = D(D^{-1}a u D^{-1}b).
HClass intersection(const Manifold& m, const HClass& a, const HClass& b);
HClass dual_basis_class(const Manifold& m, int p, std::size_t i);

// A simplicial map between prepared manifolds with its induced maps.
struct ManifoldMap {
  SimplicialMap map;
  ManifoldPtr x;
  ManifoldPtr y;
  GradedMap push;  // f_* : H_*(X) -> H_*(Y)
  GradedMap pull;  // f^* : H^*(Y) -> H^*(X)
};

ManifoldMap make_manifold_map(const SimplicialMap& f, ManifoldPtr x, ManifoldPtr y);
ManifoldMap compose(const ManifoldMap& g, const ManifoldMap& f);

struct Transfer {
  GradedMap cohomology;  // f^! : H^q(X) -> H^{q+shift}(Y)
  GradedMap homology;    // f_! : H_q(Y) -> H_{q+shift}(X)
  int shift = 0;         // dim Y - dim X
};

Transfer transfers(const ManifoldMap& f);
// d with f_* zeta_X = d zeta_Y.
Rational degree(const ManifoldMap& f);

// Tensor model of X x Y for prepared manifolds.
ProductSpace manifold_product(const Manifold& x, const Manifold& y);
TensorClass fundamental_product(const ProductSpace& p, const Manifold& x, const Manifold& y);
// D_{XxY}(T) = T n (zeta_X x zeta_Y).
TensorClass product_duality(const ProductSpace& p, const Manifold& x, const Manifold& y, const TensorClass& t);
// D_{XxY}(a x b) = (-1)^{n |b|} D_X a x D_Y b, evaluated termwise.
TensorClass product_duality_factorwise(const ProductSpace& p, const Manifold& x, const Manifold& y,
                                       const TensorClass& t);
TensorClass product_duality_inverse(const ProductSpace& p, const Manifold& x, const Manifold& y,
                                    const TensorClass& t);

}  // namespace topq
