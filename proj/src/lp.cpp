#include "topq/lp.hpp"

#include <stdexcept>

namespace topq {

namespace {

struct Tableau {
  std::size_t m = 0;  // constraint rows
  std::size_t n = 0;  // columns, excluding rhs
  std::vector<QVector> a;      // m rows of length n + 1 (last = rhs)
  QVector cost;                // reduced costs, length n + 1 (last = -objective)
  std::vector<std::size_t> basis;

  void pivot(std::size_t row, std::size_t col) {
    const Rational s = 1 / a[row][col];
    for (auto& x : a[row]) x *= s;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k <= n; ++k)
        if (a[row][k] != 0) a[r][k] -= f * a[row][k];
    }
    if (cost[col] != 0) {
      const Rational f = cost[col];
      for (std::size_t k = 0; k <= n; ++k)
        if (a[row][k] != 0) cost[k] -= f * a[row][k];
    }
    basis[row] = col;
  }
};

}  // namespace

std::optional<QVector> lp_feasible(const LinearSystem& system) {
  const std::size_t nv = system.num_vars;
  std::vector<bool> nonneg = system.nonnegative;
  nonneg.resize(nv, false);

  // Column layout: one column per nonnegative variable, two (u - w) per free
  // variable, then one slack per inequality, then one artificial per row.
  std::vector<std::size_t> pos_col(nv), neg_col(nv, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos_col[j] = ncols++;
    if (!nonneg[j]) neg_col[j] = ncols++;
  }
  const std::size_t first_slack = ncols;
  for (const auto& c : system.constraints)
    if (c.relation != Relation::Equal) ++ncols;
  const std::size_t first_artificial = ncols;
  const std::size_t m = system.constraints.size();
  ncols += m;

  Tableau t;
  t.m = m;
  t.n = ncols;
  t.a.assign(m, QVector(ncols + 1, Rational(0)));
  t.cost.assign(ncols + 1, Rational(0));
  t.basis.assign(m, 0);

  std::size_t slack = first_slack;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = system.constraints[i];
    if (c.coeffs.size() != nv) throw std::invalid_argument("lp_feasible: coefficient count mismatch");
    auto& row = t.a[i];
    for (std::size_t j = 0; j < nv; ++j) {
      row[pos_col[j]] = c.coeffs[j];
      if (neg_col[j] != SIZE_MAX) row[neg_col[j]] = -c.coeffs[j];
    }
    if (c.relation == Relation::LessEqual) row[slack++] = 1;
    if (c.relation == Relation::GreaterEqual) row[slack++] = -1;
    row[ncols] = c.rhs;
    if (row[ncols] < 0)
      for (auto& x : row) x = -x;
    row[first_artificial + i] = 1;
    t.basis[i] = first_artificial + i;
  }
  // Phase-1 objective: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= ncols; ++k)
      if (k < first_artificial || k == ncols) t.cost[k] -= t.a[i][k];

  while (true) {
    std::size_t enter = SIZE_MAX;
    for (std::size_t k = 0; k < ncols; ++k)
      if (t.cost[k] < 0) {
        enter = k;
        break;
      }
    if (enter == SIZE_MAX) break;
    std::size_t leave = SIZE_MAX;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (t.a[r][enter] <= 0) continue;
      const Rational ratio = t.a[r][ncols] / t.a[r][enter];
      if (leave == SIZE_MAX || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[r] < t.basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == SIZE_MAX) break;  // unbounded direction; cannot happen in phase 1
    t.pivot(leave, enter);
  }

  if (t.cost[ncols] != 0) return std::nullopt;  // -objective < 0 means artificials remain positive

  QVector col_value(ncols, Rational(0));
  for (std::size_t r = 0; r < m; ++r) col_value[t.basis[r]] = t.a[r][ncols];
  QVector x(nv, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    x[j] = col_value[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) x[j] -= col_value[neg_col[j]];
  }
  return x;
}

bool satisfies(const LinearSystem& system, const QVector& x) {
  if (x.size() != system.num_vars) return false;
  for (std::size_t j = 0; j < system.nonnegative.size() && j < x.size(); ++j)
    if (system.nonnegative[j] && x[j] < 0) return false;
  for (const auto& c : system.constraints) {
    const Rational lhs = dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::LessEqual:
        if (!(lhs <= c.rhs)) return false;
        break;
      case Relation::GreaterEqual:
        if (!(lhs >= c.rhs)) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace topq
