#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "topq/rational.hpp"

namespace topq {

// Column-major sparse matrix over Q. Zero entries are never stored.
class SparseMatrix {
 public:
  using Column = std::map<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<QVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);
  const Column& column(std::size_t c) const { return cols_.at(c); }

  QVector apply(const QVector& x) const;
  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  bool is_zero() const { return nnz() == 0; }
  bool operator==(const SparseMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

// Small dense matrix over Q, row-major. Used for maps between (co)homology
// groups, whose dimensions are Betti numbers.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(std::size_t rows, const std::vector<QVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  QVector apply(const QVector& x) const;
  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix scaled(const Rational& s) const;
  QMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool operator==(const QMatrix& other) const = default;

  std::optional<QMatrix> inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace topq
