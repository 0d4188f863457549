#pragma once

// Hot loops of the exact core. The default entry points are OpenMP-parallel
// above a work threshold; the `serial` namespace holds the plain reference
// versions the tests compare against.

#include <cstddef>
#include <span>

#include "ginv/rational.hpp"

namespace ginv {
class RMatrix;
}

namespace ginv::kernels {

/// Below this many scalar multiply-adds the parallel kernels run inline.
inline constexpr std::size_t kParallelThreshold = 4096;

/// out = a * b. `out` must already be a.rows() x b.cols().
void multiply(const RMatrix& a, const RMatrix& b, RMatrix& out);

/// Clears column `pivot_col` in every row except `pivot_row` of a row-major
/// rows x cols grid by subtracting multiples of the pivot row. The pivot entry
/// must already be 1. Only columns >= `first_col` are touched; columns before
/// it are assumed zero in the pivot row.
void eliminate_column(std::span<Rational> grid, std::size_t rows, std::size_t cols,
                      std::size_t pivot_row, std::size_t pivot_col, std::size_t first_col);

namespace serial {

void multiply(const RMatrix& a, const RMatrix& b, RMatrix& out);

void eliminate_column(std::span<Rational> grid, std::size_t rows, std::size_t cols,
                      std::size_t pivot_row, std::size_t pivot_col, std::size_t first_col);

}  // namespace serial

}  // namespace ginv::kernels
