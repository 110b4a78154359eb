#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "topq/matrix.hpp"

namespace topq {

// Exact Gauss-Jordan elimination of a sparse rational matrix.
//
// Pivots are chosen by the Markowitz criterion (r-1)(c-1) over the active
// submatrix, ties broken by the lowest (row, col). Every row operation is
// logged so that right-hand sides can be reduced later without refactoring.
class Factorization {
 public:
  explicit Factorization(const SparseMatrix& m);

  std::size_t rows() const { return original_.rows(); }
  std::size_t cols() const { return original_.cols(); }
  std::size_t rank() const { return pivots_.size(); }
  // (row, col) in pivot order.
  const std::vector<std::pair<std::size_t, std::size_t>>& pivots() const { return pivots_; }

  // One vector per non-pivot column, with a 1 in that column.
  std::vector<QVector> kernel_basis() const;
  // The original columns at pivot positions, in increasing column order.
  std::vector<QVector> image_basis() const;
  // Particular solution with free variables set to zero, or nullopt.
  std::optional<QVector> solve(const QVector& b) const;

 private:
  struct RowOp {
    std::size_t target;
    std::size_t source;  // == target for a scaling
    Rational factor;
  };

  SparseMatrix original_;
  std::vector<std::map<std::size_t, Rational>> reduced_rows_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
  std::vector<RowOp> ops_;
  std::vector<bool> row_is_pivot_;
  std::vector<bool> col_is_pivot_;
};

std::size_t rank(const SparseMatrix& m);
std::vector<QVector> kernel_basis(const SparseMatrix& m);
std::vector<QVector> image_basis(const SparseMatrix& m);
std::optional<QVector> solve(const SparseMatrix& m, const QVector& b);

// Incrementally maintained echelon basis of a subspace of Q^n; used for
// greedy, order-respecting independence tests.
class SpanReducer {
 public:
  explicit SpanReducer(std::size_t dim) : dim_(dim) {}

  // Adds v if it is independent of what is already spanned. Returns whether it was added.
  bool add(const QVector& v);
  bool contains(const QVector& v) const;
  std::size_t size() const { return basis_.size(); }

 private:
  std::map<std::size_t, Rational> reduce(const QVector& v) const;

  std::size_t dim_;
  // leading index -> vector with leading coefficient 1
  std::map<std::size_t, std::map<std::size_t, Rational>> basis_;
};

}  // namespace topq
