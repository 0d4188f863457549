#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ginv/errors.hpp"
#include "ginv/rational.hpp"

namespace ginv {

/// Dense row-major matrix of exact rationals. Always at least 1x1: a block
/// with a vanishing dimension is represented by an absent `Block` instead.
class RMatrix {
 public:
  /// Zero matrix. Throws DimensionMismatch if either count is zero.
  RMatrix(std::size_t rows, std::size_t cols);
  RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix zero(std::size_t rows, std::size_t cols) { return RMatrix(rows, cols); }
  static RMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Rational> entries() { return entries_; }
  std::span<const Rational> entries() const { return entries_; }
  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  /// Copy of the sub-grid [row0, row0+rows) x [col0, col0+cols).
  RMatrix slice(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

RMatrix operator+(const RMatrix& a, const RMatrix& b);
RMatrix operator-(const RMatrix& a, const RMatrix& b);
RMatrix operator-(const RMatrix& a);
RMatrix operator*(const RMatrix& a, const RMatrix& b);
RMatrix operator*(const Rational& s, const RMatrix& a);

RMatrix transpose(const RMatrix& a);

/// Exact Gauss-Jordan inverse. Throws DimensionMismatch (non-square) or SingularMatrix.
RMatrix inverse(const RMatrix& a);

std::size_t rank(const RMatrix& a);

/// A^k for square A, with A^0 = I.
RMatrix power(const RMatrix& a, std::size_t k);

/// Rows of `a` followed by rows of `b`.
RMatrix vstack(const RMatrix& a, const RMatrix& b);

struct RowEchelon {
  RMatrix reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivot_cols;   // pivot column of each nonzero row, ascending
};

/// Reduced row echelon form; pivots are the first nonzero entry of each column scanned top-down.
RowEchelon row_reduce(const RMatrix& a);

std::ostream& operator<<(std::ostream& os, const RMatrix& a);

// --- Blocks ---------------------------------------------------------------

/// A block of a 2x2 block matrix: either a real matrix, or `absent` when its
/// row or column count is zero.
using Block = std::optional<RMatrix>;
inline constexpr std::nullopt_t absent = std::nullopt;

struct BlockQuad {
  Block x0;
  Block x1;
  Block x2;
  Block x3;
};

/// Assembles [[x0, x1], [x2, x3]]. A block may be absent only when its row
/// or column count is forced to zero by the other blocks.
RMatrix block_compose(const Block& x0, const Block& x1, const Block& x2, const Block& x3);
inline RMatrix block_compose(const BlockQuad& q) { return block_compose(q.x0, q.x1, q.x2, q.x3); }

/// Splits `a` after `split` rows and `split` columns. Throws IndexOutOfRange
/// when split > min(rows, cols).
BlockQuad block_extract(const RMatrix& a, std::size_t split);

/// Splits after `row_split` rows and `col_split` columns.
BlockQuad block_extract(const RMatrix& a, std::size_t row_split, std::size_t col_split);

}  // namespace ginv
