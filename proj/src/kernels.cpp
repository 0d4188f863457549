#include "ginv/kernels.hpp"

#include <cstdint>

#include "ginv/matrix.hpp"

namespace ginv::kernels {

namespace {

// One output entry of a*b, accumulated in a raw mpq to avoid temporaries.
void dot_into(const RMatrix& a, const RMatrix& b, std::size_t i, std::size_t j, mpq_class& acc,
              mpq_class& tmp) {
  acc = 0;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const auto& x = a(i, k).value();
    if (sgn(x) == 0) continue;
    const auto& y = b(k, j).value();
    if (sgn(y) == 0) continue;
    mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
    acc += tmp;
  }
}

void update_row(std::span<Rational> grid, std::size_t cols, std::size_t row, std::size_t pivot_row,
                std::size_t pivot_col, std::size_t first_col) {
  Rational* target = grid.data() + row * cols;
  const Rational* pivot = grid.data() + pivot_row * cols;
  if (target[pivot_col].is_zero()) return;
  const Rational factor = target[pivot_col];
  for (std::size_t k = first_col; k < cols; ++k) {
    if (!pivot[k].is_zero()) target[k] -= factor * pivot[k];
  }
}

}  // namespace

void multiply(const RMatrix& a, const RMatrix& b, RMatrix& out) {
  const auto rows = static_cast<std::int64_t>(a.rows());
  const std::size_t work = a.rows() * a.cols() * b.cols();
#pragma omp parallel if (work >= kParallelThreshold)
  {
    mpq_class acc;
    mpq_class tmp;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        dot_into(a, b, static_cast<std::size_t>(i), j, acc, tmp);
        out(static_cast<std::size_t>(i), j) = Rational(acc);
      }
    }
  }
}

void eliminate_column(std::span<Rational> grid, std::size_t rows, std::size_t cols,
                      std::size_t pivot_row, std::size_t pivot_col, std::size_t first_col) {
  const std::size_t work = rows * (cols - first_col);
  const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (work >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(i) == pivot_row) continue;
    update_row(grid, cols, static_cast<std::size_t>(i), pivot_row, pivot_col, first_col);
  }
}

namespace serial {

void multiply(const RMatrix& a, const RMatrix& b, RMatrix& out) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
}

void eliminate_column(std::span<Rational> grid, std::size_t rows, std::size_t cols,
                      std::size_t pivot_row, std::size_t pivot_col, std::size_t first_col) {
  for (std::size_t i = 0; i < rows; ++i) {
    if (i == pivot_row) continue;
    update_row(grid, cols, i, pivot_row, pivot_col, first_col);
  }
}

}  // namespace serial

}  // namespace ginv::kernels
