#pragma once
// Test-side reference computations. Nothing here calls the library's chain,
// homology or linear-algebra code: faces are enumerated from the maximal
// simplices directly, boundary matrices are dense, ranks come from plain
// row reduction.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Face = std::vector<std::string>;  // sorted vertex names

inline std::vector<std::set<Face>> faces(const std::vector<Face>& maximal) {
  std::vector<std::set<Face>> by_dim;
  for (Face m : maximal) {
    std::sort(m.begin(), m.end());
    const std::size_t k = m.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Face f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(m[i]);
      if (by_dim.size() < f.size()) by_dim.resize(f.size());
      by_dim[f.size() - 1].insert(f);
    }
  }
  return by_dim;
}

inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Rank of the boundary C_k -> C_{k-1} with the alternating-face formula.
inline std::size_t boundary_rank(const std::set<Face>& k_faces, const std::set<Face>& lower) {
  std::map<Face, std::size_t> row;
  for (const auto& f : lower) row.emplace(f, row.size());
  std::vector<std::vector<mpq_class>> m(lower.size(), std::vector<mpq_class>(k_faces.size(), 0));
  std::size_t col = 0;
  for (const auto& s : k_faces) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Face f = s;
      f.erase(f.begin() + static_cast<long>(i));
      m[row.at(f)][col] = (i % 2 == 0) ? 1 : -1;
    }
    ++col;
  }
  return dense_rank(m);
}

inline std::vector<std::size_t> betti(const std::vector<Face>& maximal) {
  const auto f = faces(maximal);
  std::vector<std::size_t> ranks(f.size() + 1, 0);
  for (std::size_t k = 1; k < f.size(); ++k) ranks[k] = boundary_rank(f[k], f[k - 1]);
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k < f.size(); ++k) b.push_back(f[k].size() - ranks[k] - ranks[k + 1]);
  return b;
}

inline long euler(const std::vector<Face>& maximal) {
  long chi = 0;
  long sign = 1;
  for (const auto& d : faces(maximal)) {
    chi += sign * static_cast<long>(d.size());
    sign = -sign;
  }
  return chi;
}

// Sign of the permutation that sorts `v`.
inline int permutation_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

inline mpq_class trace(const std::vector<std::vector<mpq_class>>& m) {
  mpq_class t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace oracle
