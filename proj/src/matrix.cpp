#include "topq/matrix.hpp"

#include <stdexcept>

namespace topq {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<QVector>& columns) {
  SparseMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (columns[c][r] != 0) m.cols_[c].emplace(r, columns[c][r]);
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("SparseMatrix::set");
  if (value == 0)
    cols_[c].erase(r);
  else
    cols_[c][r] = value;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (value == 0) return;
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("SparseMatrix::add");
  auto& col = cols_[c];
  auto [it, inserted] = col.emplace(r, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  }
}

QVector SparseMatrix::apply(const QVector& x) const {
  if (x.size() != cols()) throw std::invalid_argument("SparseMatrix::apply: size mismatch");
  QVector y(rows_, Rational(0));
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (x[c] == 0) continue;
    for (const auto& [r, v] : cols_[c]) y[r] += v * x[c];
  }
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, v] : cols_[c]) t.cols_[r].emplace(c, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols() != other.rows()) throw std::invalid_argument("SparseMatrix product: shape mismatch");
  SparseMatrix p(rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c)
    for (const auto& [k, v] : other.cols_[c])
      for (const auto& [r, w] : cols_[k]) p.add(r, c, w * v);
  return p;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<QVector>& columns) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QVector QMatrix::apply(const QVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("QMatrix::apply: size mismatch");
  QVector y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && x[c] != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("QMatrix product: shape mismatch");
  QMatrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        if (other(k, c) != 0) p(r, c) += a * other(k, c);
    }
  return p;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("QMatrix sum: shape mismatch");
  QMatrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += other.data_[i];
  return s;
}

QMatrix QMatrix::operator-(const QMatrix& other) const { return *this + other.scaled(-1); }

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix m(*this);
  for (auto& x : m.data_) x *= s;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational QMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  QMatrix a(*this);
  QMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(p, k), a(c, k));
        std::swap(inv(p, k), inv(c, k));
      }
    const Rational s = 1 / a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= s;
      inv(c, k) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

std::size_t QMatrix::rank() const {
  QMatrix a(*this);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t p = rank;
    while (p < rows_ && a(p, c) == 0) ++p;
    if (p == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(a(p, k), a(rank, k));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(rank, c);
      for (std::size_t k = c; k < cols_; ++k) a(r, k) -= f * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace topq
