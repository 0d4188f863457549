#pragma once

// Arithmetic on possibly-absent blocks. Shapes are always passed explicitly
// because an absent block carries none.

#include <cstddef>
#include <string>

#include "ginv/matrix.hpp"

namespace ginv::detail {

inline Block zero_or_absent(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return absent;
  return RMatrix::zero(rows, cols);
}

/// a * b with result shape rows x cols. An absent factor means the inner
/// dimension is zero, so the product is the zero block.
inline Block mul(const Block& a, const Block& b, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return absent;
  if (!a || !b) return RMatrix::zero(rows, cols);
  return *a * *b;
}

inline Block neg(const Block& a) {
  if (!a) return absent;
  return -*a;
}

inline bool same(const Block& a, const Block& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

inline bool is_symmetric(const RMatrix& a) { return a.is_square() && transpose(a) == a; }

inline void expect_shape(const Block& b, std::size_t rows, std::size_t cols, const char* name) {
  const std::string want = std::to_string(rows) + "x" + std::to_string(cols);
  if (rows == 0 || cols == 0) {
    if (b) {
      throw DimensionMismatch(std::string(name) + " must be absent (shape " + want + "), got " +
                              std::to_string(b->rows()) + "x" + std::to_string(b->cols()));
    }
    return;
  }
  if (!b) throw DimensionMismatch(std::string(name) + " is absent, expected " + want);
  if (b->rows() != rows || b->cols() != cols) {
    throw DimensionMismatch(std::string(name) + " must be " + want + ", got " + std::to_string(b->rows()) +
                            "x" + std::to_string(b->cols()));
  }
}

}  // namespace ginv::detail
