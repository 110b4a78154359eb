#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topq/chains.hpp"
#include "topq/linalg.hpp"

namespace topq {

enum class Variance { Homology, Cohomology };

// A (co)homology class: coordinates in the basis of one degree.
struct HClass {
  int degree = 0;
  QVector coords;
};

// Per-degree basis of H_* or H^* of a chain complex. Each basis element is a
// cycle (cocycle) representative; coordinates of an arbitrary cycle are read
// off by solving against [boundaries | representatives].
class GradedSpace {
 public:
  GradedSpace() = default;
  static GradedSpace homology(const ChainComplex& c);
  static GradedSpace cohomology(const ChainComplex& c);

  Variance variance() const { return variance_; }
  const std::string& name() const { return name_; }
  int top_degree() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t dim(int deg) const;
  std::size_t cells(int deg) const;
  std::vector<std::size_t> betti() const;

  const std::vector<QVector>& representatives(int deg) const;
  QVector representative(const HClass& c) const;
  HClass basis_class(int deg, std::size_t i) const;
  HClass zero(int deg) const { return HClass{deg, QVector(dim(deg), Rational(0))}; }

  bool is_cycle(int deg, const QVector& chain) const;
  // Lies in the image of the incoming differential.
  bool is_boundary(int deg, const QVector& chain) const;
  // Throws DegreeMismatch when `chain` is not a cycle (cocycle).
  QVector coordinates(int deg, const QVector& chain) const;
  HClass class_of(int deg, const QVector& chain) const { return HClass{deg, coordinates(deg, chain)}; }

  // Concatenation of all degrees: the "total" basis.
  std::size_t total_dim() const;
  std::size_t offset(int deg) const;
  int degree_of(std::size_t total_index) const;
  QVector embed(const HClass& c) const;
  HClass extract(int deg, const QVector& total) const;

 private:
  struct Level {
    std::size_t cells = 0;
    std::vector<QVector> reps;
    SparseMatrix outgoing;
    std::shared_ptr<const Factorization> incoming;
    std::shared_ptr<const Factorization> spanned;  // [boundary basis | reps]
    std::size_t boundary_rank = 0;
  };
  static GradedSpace build(const std::string& name, Variance variance, const std::vector<SparseMatrix>& outgoing,
                           const std::vector<SparseMatrix>& incoming);

  Variance variance_ = Variance::Homology;
  std::string name_;
  std::vector<Level> levels_;
};

// Per-degree dense matrices between graded spaces. blocks[m] acts on degree m
// of the source and lands in degree m + shift of the target.
struct GradedMap {
  std::vector<QMatrix> blocks;
  int shift = 0;

  const QMatrix& block(int deg) const { return blocks.at(static_cast<std::size_t>(deg)); }
  HClass apply(const HClass& c) const { return HClass{c.degree + shift, block(c.degree).apply(c.coords)}; }
  // Block-diagonal matrix over total bases (degree-preserving maps only).
  QMatrix total() const;
  bool operator==(const GradedMap&) const = default;
};

GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap identity_graded(const GradedSpace& s);

// Map on (co)homology induced by per-degree matrices of the underlying
// complexes. For homology, `cells[m]` maps src degree m to dst degree m + shift.
// For cohomology it is applied as given to cocycles of src.
GradedMap induced_on(const GradedSpace& src, const GradedSpace& dst, const std::vector<SparseMatrix>& cells,
                     int shift = 0);

// f_* : H_*(X) -> H_*(Y).
GradedMap induced_homology(const SimplicialMap& f, const GradedSpace& hx, const GradedSpace& hy);
// f^* : H^*(Y) -> H^*(X), pulling back cocycles by the transpose of f_#.
GradedMap induced_cohomology(const SimplicialMap& f, const GradedSpace& cy, const GradedSpace& cx);

Rational kronecker(const GradedSpace& coh, const HClass& alpha, const GradedSpace& hom, const HClass& sigma);
// Entry (i, j) is (a_i, s_j) for the degree-`deg` bases.
QMatrix pairing_matrix(const GradedSpace& coh, const GradedSpace& hom, int deg);

struct SequenceNode {
  std::string group;  // "A", "X" or "X,A"
  int degree = 0;
  bool composite_zero = false;
  bool ranks_match = false;
  bool exact() const { return composite_zero && ranks_match; }
};

// ... -> H_m(A) -i-> H_m(X) -j-> H_m(X,A) -d-> H_{m-1}(A) -> ...
struct ExactSequence {
  GradedSpace h_sub, h_ambient, h_relative;
  std::vector<QMatrix> i_star, j_star;
  // connecting[m] : H_m(X,A) -> H_{m-1}(A); connecting[0] has zero rows.
  std::vector<QMatrix> connecting;
  std::vector<SequenceNode> nodes;
  bool exact() const;
};

ExactSequence long_exact_sequence(const RelativePair& pair);

struct ExcisionReport {
  std::vector<std::size_t> excised_betti;
  std::vector<std::size_t> full_betti;
  std::vector<bool> iso;
  bool isomorphism() const;
};

// A and U are simplex lists in the vertex indices of x; A is face-closed
// before use. U must be open (closed under cofaces) with closure(U) inside the
// interior of A, else HypothesisViolated.
ExcisionReport excision_check(const ComplexPtr& x, const std::vector<Simplex>& a, const std::vector<Simplex>& u);

}  // namespace topq
