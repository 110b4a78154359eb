#include "topq/linalg.hpp"

#include <limits>
#include <set>
#include <stdexcept>

namespace topq {

Factorization::Factorization(const SparseMatrix& m)
    : original_(m),
      reduced_rows_(m.rows()),
      row_is_pivot_(m.rows(), false),
      col_is_pivot_(m.cols(), false) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<std::set<std::size_t>> col_occupancy(ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [r, v] : m.column(c)) {
      reduced_rows_[r].emplace(c, v);
      col_occupancy[c].insert(r);
    }

  std::vector<std::size_t> row_count(nrows), col_count(ncols);
  while (true) {
    // Counts over the active submatrix.
    std::fill(row_count.begin(), row_count.end(), 0);
    std::fill(col_count.begin(), col_count.end(), 0);
    bool any = false;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (row_is_pivot_[r]) continue;
      for (const auto& [c, v] : reduced_rows_[r]) {
        if (col_is_pivot_[c]) continue;
        ++row_count[r];
        ++col_count[c];
        any = true;
      }
    }
    if (!any) break;

    std::size_t best_r = 0, best_c = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < nrows && best_cost > 0; ++r) {
      if (row_is_pivot_[r]) continue;
      for (const auto& [c, v] : reduced_rows_[r]) {
        if (col_is_pivot_[c]) continue;
        const std::size_t cost = (row_count[r] - 1) * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
        }
      }
    }

    auto& prow = reduced_rows_[best_r];
    const Rational scale = 1 / prow.at(best_c);
    if (scale != 1) {
      for (auto& [c, v] : prow) v *= scale;
      ops_.push_back({best_r, best_r, scale});
    }

    const std::vector<std::size_t> targets(col_occupancy[best_c].begin(), col_occupancy[best_c].end());
    for (std::size_t r : targets) {
      if (r == best_r) continue;
      auto& row = reduced_rows_[r];
      const Rational factor = -row.at(best_c);
      for (const auto& [c, v] : prow) {
        auto [it, inserted] = row.emplace(c, factor * v);
        if (inserted) {
          col_occupancy[c].insert(r);
        } else {
          it->second += factor * v;
          if (it->second == 0) {
            row.erase(it);
            col_occupancy[c].erase(r);
          }
        }
      }
      ops_.push_back({r, best_r, factor});
    }

    row_is_pivot_[best_r] = true;
    col_is_pivot_[best_c] = true;
    pivots_.emplace_back(best_r, best_c);
  }
}

std::vector<QVector> Factorization::kernel_basis() const {
  std::vector<QVector> basis;
  for (std::size_t j = 0; j < cols(); ++j) {
    if (col_is_pivot_[j]) continue;
    QVector x(cols(), Rational(0));
    x[j] = 1;
    for (const auto& [r, c] : pivots_) {
      auto it = reduced_rows_[r].find(j);
      if (it != reduced_rows_[r].end()) x[c] = -it->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<QVector> Factorization::image_basis() const {
  std::vector<QVector> basis;
  for (std::size_t c = 0; c < cols(); ++c) {
    if (!col_is_pivot_[c]) continue;
    QVector v(rows(), Rational(0));
    for (const auto& [r, x] : original_.column(c)) v[r] = x;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> Factorization::solve(const QVector& b) const {
  if (b.size() != rows()) throw std::invalid_argument("Factorization::solve: size mismatch");
  QVector y(b);
  for (const auto& op : ops_) {
    if (op.target == op.source)
      y[op.target] *= op.factor;
    else if (y[op.source] != 0)
      y[op.target] += op.factor * y[op.source];
  }
  for (std::size_t r = 0; r < rows(); ++r)
    if (!row_is_pivot_[r] && y[r] != 0) return std::nullopt;
  QVector x(cols(), Rational(0));
  for (const auto& [r, c] : pivots_) x[c] = y[r];
  return x;
}

std::size_t rank(const SparseMatrix& m) { return Factorization(m).rank(); }
std::vector<QVector> kernel_basis(const SparseMatrix& m) { return Factorization(m).kernel_basis(); }
std::vector<QVector> image_basis(const SparseMatrix& m) { return Factorization(m).image_basis(); }
std::optional<QVector> solve(const SparseMatrix& m, const QVector& b) { return Factorization(m).solve(b); }

std::map<std::size_t, Rational> SpanReducer::reduce(const QVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanReducer: size mismatch");
  std::map<std::size_t, Rational> w;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) w.emplace(i, v[i]);
  while (!w.empty()) {
    const auto lead = w.begin()->first;
    auto it = basis_.find(lead);
    if (it == basis_.end()) break;
    const Rational f = w.begin()->second;
    for (const auto& [i, x] : it->second) {
      auto [jt, inserted] = w.emplace(i, -f * x);
      if (!inserted) {
        jt->second -= f * x;
        if (jt->second == 0) w.erase(jt);
      }
    }
  }
  return w;
}

bool SpanReducer::add(const QVector& v) {
  auto w = reduce(v);
  if (w.empty()) return false;
  const Rational s = 1 / w.begin()->second;
  for (auto& [i, x] : w) x *= s;
  const auto lead = w.begin()->first;
  basis_.emplace(lead, std::move(w));
  return true;
}

bool SpanReducer::contains(const QVector& v) const { return reduce(v).empty(); }

}  // namespace topq
