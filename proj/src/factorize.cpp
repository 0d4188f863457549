#include "ginv/factorize.hpp"

#include <optional>
#include <string>
#include <utility>

#include "ginv/kernels.hpp"

namespace ginv {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Pivot search restricted to rows >= t and columns >= t of the m x n corner.
std::optional<Position> find_pivot(const RMatrix& w, std::size_t t, std::size_t m, std::size_t n,
                                   PivotPolicy policy) {
  if (policy == PivotPolicy::RowMajor) {
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (!w(i, j).is_zero()) return Position{i, j};
      }
    }
  } else {
    for (std::size_t i = m; i-- > t;) {
      for (std::size_t j = n; j-- > t;) {
        if (!w(i, j).is_zero()) return Position{i, j};
      }
    }
  }
  return std::nullopt;
}

bool invertible(const RMatrix& x) { return x.is_square() && rank(x) == x.rows(); }

}  // namespace

RMatrix partial_identity(std::size_t rows, std::size_t cols, std::size_t r) {
  RMatrix e(rows, cols);
  for (std::size_t i = 0; i < r; ++i) e(i, i) = 1;
  return e;
}

FactoredMatrix full_rank_reduce(const RMatrix& a, PivotPolicy policy) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t width = n + m;

  // Rows of [A | I_m]: every row operation lands on Q as well.
  RMatrix upper(m, width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) upper(i, j) = a(i, j);
    upper(i, n + i) = 1;
  }
  // Column operations are recorded in P directly.
  RMatrix p = RMatrix::identity(n);

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    const auto pivot = find_pivot(upper, t, m, n, policy);
    if (!pivot) break;

    if (pivot->row != t) {
      for (std::size_t k = 0; k < width; ++k) std::swap(upper(pivot->row, k), upper(t, k));
    }
    if (pivot->col != t) {
      for (std::size_t i = 0; i < m; ++i) std::swap(upper(i, pivot->col), upper(i, t));
      for (std::size_t i = 0; i < n; ++i) std::swap(p(i, pivot->col), p(i, t));
    }

    const Rational scale = Rational(1) / upper(t, t);
    for (std::size_t k = 0; k < width; ++k) upper(t, k) *= scale;
    kernels::eliminate_column(upper.entries(), m, width, t, t, 0);

    // Column t is now e_t, so clearing row t to the right only touches
    // row t of the A-part; P absorbs the matching column operations.
    for (std::size_t j = t + 1; j < n; ++j) {
      const Rational factor = upper(t, j);
      if (factor.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (!p(i, t).is_zero()) p(i, j) -= factor * p(i, t);
      }
      upper(t, j) = 0;
    }
  }

  return FactoredMatrix{a, std::move(p), upper.slice(0, n, m, m), t};
}

bool verify_factorization(const FactoredMatrix& f) {
  if (f.p.rows() != f.n() || !f.p.is_square()) return false;
  if (f.q.rows() != f.m() || !f.q.is_square()) return false;
  if (f.r > std::min(f.m(), f.n())) return false;
  if (f.q * f.a * f.p != partial_identity(f.m(), f.n(), f.r)) return false;
  return invertible(f.p) && invertible(f.q) && rank(f.a) == f.r;
}

FactoredMatrix factor_with(const RMatrix& a, const RMatrix& p, const RMatrix& q) {
  if (!p.is_square() || p.rows() != a.cols() || !q.is_square() || q.rows() != a.rows()) {
    throw InvalidFactorization("factor_with: P must be " + std::to_string(a.cols()) + "x" +
                               std::to_string(a.cols()) + " and Q must be " + std::to_string(a.rows()) +
                               "x" + std::to_string(a.rows()));
  }
  FactoredMatrix f{a, p, q, rank(a)};
  if (!verify_factorization(f)) {
    throw InvalidFactorization("factor_with: Q*A*P != E_" + std::to_string(f.r) +
                               " or a factor is singular");
  }
  return f;
}

}  // namespace ginv
