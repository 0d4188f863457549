#pragma once

// Test-only reference arithmetic on plain mpq_class grids. Nothing here goes
// through the library's kernels, row reduction, or penrose_check, so it can
// serve as an independent oracle for them.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ginv/matrix.hpp"

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;

inline Grid grid(const ginv::RMatrix& a) {
  Grid g(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) g[i][j] = a(i, j).value();
  }
  return g;
}

inline Grid mul(const Grid& a, const Grid& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.front().size();
  Grid c(n, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      mpq_class s = 0;
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      c[i][j] = s;
    }
  }
  return c;
}

inline Grid tr(const Grid& a) {
  Grid t(a.front().size(), std::vector<mpq_class>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

/// Row-reduces in place and returns the pivot columns.
inline std::vector<std::size_t> rref(Grid& g) {
  std::vector<std::size_t> pivots;
  if (g.empty()) return pivots;
  const std::size_t m = g.size(), n = g.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && g[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(g[p], g[row]);
    const mpq_class inv = 1 / g[row][col];
    for (auto& v : g[row]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || g[i][col] == 0) continue;
      const mpq_class f = g[i][col];
      for (std::size_t j = 0; j < n; ++j) g[i][j] -= f * g[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Grid g) { return rref(g).size(); }

/// Basis of {v : A v = 0}.
inline std::vector<std::vector<mpq_class>> null_space(Grid a) {
  const std::size_t n = a.front().size();
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Brute-force N(A) = N(B): equal dimension and every basis vector of N(A) killed by B.
inline bool same_null_space(const Grid& a, const Grid& b) {
  const auto na = null_space(a);
  if (na.size() != null_space(b).size()) return false;
  for (const auto& v : na) {
    for (const auto& row : b) {
      mpq_class s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
      if (s != 0) return false;
    }
  }
  return true;
}

struct Equations {
  bool e1, e2, e3, e4;
};

inline Equations penrose(const ginv::RMatrix& a_, const ginv::RMatrix& x_) {
  const Grid a = grid(a_), x = grid(x_);
  const Grid ax = mul(a, x), xa = mul(x, a);
  return {mul(ax, a) == a, mul(x, ax) == x, tr(ax) == ax, tr(xa) == xa};
}

inline Grid power(const Grid& a, std::size_t k) {
  Grid r(a.size(), std::vector<mpq_class>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i][i] = 1;
  for (std::size_t t = 0; t < k; ++t) r = mul(r, a);
  return r;
}

/// Smallest k with rank(A^k) = rank(A^{k+1}), by direct enumeration.
inline std::size_t index(const Grid& a) {
  for (std::size_t k = 0;; ++k) {
    if (rank(power(a, k)) == rank(power(a, k + 1))) return k;
  }
}

}  // namespace oracle
