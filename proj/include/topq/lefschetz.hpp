#pragma once

#include <string>
#include <vector>

#include "topq/duality.hpp"
#include "topq/lp.hpp"

namespace topq {

// Index set of the dual-basis expansion: b = basis class `index` of
// H^{n-p}, with dual class bhat in H^p.
struct DualIndex {
  int p = 0;
  std::size_t index = 0;
};
std::vector<DualIndex> dual_indices(const Manifold& m);

struct LefschetzClass {
  ProductSpace space;  // X x X
  TensorClass value;   // sum (-1)^{deg b_i} bhat_i x b_i
  // extraction(i, j) = <b_i x bhat_j, Lambda> over dual_indices order, and
  // expected(i, j) = (-1)^{n deg b_i} (-1)^{deg b_i} delta_ij.
  QMatrix extraction;
  QMatrix expected;
  bool extraction_matches() const { return extraction == expected; }
};

LefschetzClass lefschetz_class(const ManifoldPtr& m);

struct EulerData {
  QVector euler_class;  // total cohomology coordinates, degree n
  QVector diagonal_pullback;  // Delta^* Lambda, same space
  Rational euler_number;
  long combinatorial = 0;
  bool consistent() const { return euler_class == diagonal_pullback && euler_number == combinatorial; }
};

EulerData euler_data(const ManifoldPtr& m);

// sigma[p] : H^p -> H^p, in the standard basis of H^p.
using LefschetzHom = std::vector<QMatrix>;

LefschetzHom identity_hom(const Manifold& m);
// lambda_X(sigma) = sum_p (-1)^p sum_j sigma(bhat_j) x b_j.
TensorClass lefschetz_iso(const Manifold& m, const ProductSpace& xx, const LefschetzHom& sigma);
Rational graded_trace(const LefschetzHom& sigma);
// (Delta^* t, zeta_X).
Rational diagonal_trace(const Manifold& m, const ProductSpace& xx, const TensorClass& t);

enum class WitnessStatus { Found, NoneLambdaZero, SearchExhausted, NotRequested };
const char* to_string(WitnessStatus s);

struct Witness {
  WitnessStatus status = WitnessStatus::NotRequested;
  int level = -1;  // subdivision level of the carrier
  std::string carrier_label;
  QVector coords;  // barycentric in the level-`level` carrier
  // The same point in the original complex.
  Simplex base_carrier;
  QVector base_coords;
  QVector image;  // |f|(x) = |g|(x) in Q^{vertices of Y}
  std::size_t simplices_checked = 0;
};

struct CoincidenceReport {
  std::string f_name, g_name;
  int n = 0;
  Rational lambda;                    // sum (-1)^p tr(f^* g^! | H^p(X))
  Rational trace_shriek_pull;         // sum (-1)^p tr(f^! g^* | H^{n-p}(Y))
  Rational trace_homology_shriek;     // sum (-1)^p tr(f_! g_* | H_{n-p}(X))
  Rational trace_push_shriek;         // sum (-1)^p tr(f_* g_! | H_p(Y))
  // Same composites traced with the degree index p read literally.
  Rational literal_shriek_pull;       // sum (-1)^p tr(f^! g^* | H^p(Y))
  Rational literal_homology_shriek;   // sum (-1)^p tr(f_! g_* | H_p(X))
  Rational pairing;                   // (Delta^* (f x g)^* lambda_Y(1), zeta_X)
  Rational pairing_lefschetz_class;   // (Delta^* (f x g)^* Lambda_Y, zeta_X)
  Rational intersection;              // eps_*(zeta_f . zeta_g)
  Rational intersection_reversed;     // eps_*((gamma_g u gamma_f) n zeta_{XxY})
  Rational sign_n;                    // (-1)^n
  Witness witness;

  // Every route equals lambda, after the (-1)^n factors carried by the
  // literal-degree traces, the Lambda_Y pairing and eps_*(zeta_f . zeta_g).
  bool consistent() const;
  // The formulas read literally (degree index as written, Lambda_Y, zeta_f . zeta_g)
  // all equal lambda. Holds for even n; for odd n it needs lambda = 0.
  bool literal_agreement() const;
};

CoincidenceReport coincidence_number(const ManifoldMap& f, const ManifoldMap& g);

// Exact search for |f|(x) = |g|(x). Codomain vertices are realized as the
// standard basis of Q^{#vertices(Y)}; every simplex of X (then of successive
// barycentric subdivisions, up to max_subdivisions) is tested by lp_feasible.
Witness coincidence_witness(const SimplicialMap& f, const SimplicialMap& g, int max_subdivisions,
                            bool lambda_nonzero);
// Recomputes |f|(x) and |g|(x) from the base point and compares them exactly.
bool verify_witness(const SimplicialMap& f, const SimplicialMap& g, const Simplex& carrier, const QVector& coords);

}  // namespace topq
