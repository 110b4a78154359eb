#pragma once

#include <string>
#include <vector>

#include "topq/complex.hpp"
#include "topq/matrix.hpp"

namespace topq {

// Graded free Q-module with one basis element per listed simplex and
// boundary[m] : C_m -> C_{m-1}. boundary[0] has zero rows.
struct ChainComplex {
  std::string name;
  std::vector<std::vector<Simplex>> basis;
  std::vector<SparseMatrix> boundary;

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t size(int m) const;
  // Boundary out of degree m, with the right shape for any integer m.
  SparseMatrix d(int m) const;
  // Coboundary delta^m : C^m -> C^{m+1}, the transpose of d(m+1).
  SparseMatrix coboundary(int m) const;
};

ChainComplex build_chain_complex(const SimplicialComplex& x);

struct Chain {
  int degree = 0;
  QVector coeffs;
};

struct Cochain {
  int degree = 0;
  QVector coeffs;
};

// One matrix per degree; a chain map C_*(X) -> C_*(Y) of degree zero.
using ChainMap = std::vector<SparseMatrix>;

struct Subcomplex {
  ComplexPtr complex;
  SimplicialMap inclusion;
};

// Face closure of `simplices` (given in the vertex indices of x), as a
// complex of its own together with its inclusion into x.
Subcomplex make_subcomplex(const ComplexPtr& x, const std::vector<Simplex>& simplices, std::string name);
// Inclusion by vertex names; throws NotSubcomplex.
SimplicialMap inclusion_by_names(const ComplexPtr& sub, const ComplexPtr& super);

// Quotient C_*(X)/C_*(A) for an injective simplicial inclusion A -> X.
struct RelativePair {
  SimplicialMap inclusion;
  ChainComplex ambient;
  ChainComplex sub;
  ChainComplex quotient;
  // kept[m][k]: index in X of the k-th quotient basis simplex.
  std::vector<std::vector<std::size_t>> kept;

  // C_*(X) -> C_*(X,A).
  ChainMap projection() const;
  // C_*(A) -> C_*(X).
  ChainMap inclusion_map() const;
  // C_m(X,A) -> C_{m-1}(A): lift, take the boundary in X, restrict to A.
  SparseMatrix connecting(int m) const;
};

RelativePair build_relative(const SimplicialMap& inclusion);

ChainMap induced_chain_map(const SimplicialMap& f);
bool is_chain_map(const ChainComplex& src, const ChainComplex& dst, const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);

Chain boundary_of(const ChainComplex& c, const Chain& z);

// Joins the vertex p to every simplex of z. Simplices containing p go to 0.
// Throws ConeNotDefined when p together with a simplex of z spans no simplex of x.
Chain cone(const SimplicialComplex& x, int p, const Chain& z);

// Classical Sd_# : C_*(X) -> C_*(Sd X), Sd(v) = v and Sd(s) = b_s . Sd(ds).
ChainMap subdivision_chain_map(const SimplicialComplex& x, const Subdivision& sd);

}  // namespace topq
