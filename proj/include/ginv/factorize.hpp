#pragma once

#include <cstddef>

#include "ginv/matrix.hpp"

namespace ginv {

/// Where full_rank_reduce looks for the next pivot in the unreduced corner.
enum class PivotPolicy {
  /// First nonzero entry scanning each row left to right, rows top to bottom.
  RowMajor,
  /// First nonzero entry scanning each row right to left, rows bottom to top.
  ReverseScan,
};

/// Regular P (n x n) and Q (m x m) with Q * A * P = E_r for an m x n matrix A.
struct FactoredMatrix {
  RMatrix a;
  RMatrix p;
  RMatrix q;
  std::size_t r;

  std::size_t m() const { return a.rows(); }
  std::size_t n() const { return a.cols(); }
};

/// E_r of the given shape: ones on the first r diagonal places.
RMatrix partial_identity(std::size_t rows, std::size_t cols, std::size_t r);

/// Reduces [A I_m; I_n 0] to [E_r Q; P 0] by elementary row and column
/// operations. Works for any A, including the zero matrix (r = 0).
FactoredMatrix full_rank_reduce(const RMatrix& a, PivotPolicy policy = PivotPolicy::RowMajor);

/// True iff Q*A*P = E_r, P and Q are invertible, and r = rank(A).
bool verify_factorization(const FactoredMatrix& f);

/// Wraps caller-supplied factors. Throws InvalidFactorization if they do not
/// reduce `a` to E_rank(a).
FactoredMatrix factor_with(const RMatrix& a, const RMatrix& p, const RMatrix& q);

}  // namespace ginv
