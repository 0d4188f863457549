#include "ginv/matrix.hpp"

#include <sstream>
#include <string>

#include "ginv/kernels.hpp"

namespace ginv {

namespace {

std::string shape(const RMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const RMatrix& a, const RMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

RMatrix::RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("RMatrix: zero-sized matrix " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " (use an absent block)");
  }
  entries_.resize(rows * cols);
}

RMatrix::RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : RMatrix(rows, cols) {
  if (entries.size() != rows * cols) {
    throw DimensionMismatch("RMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries.size()));
  }
  entries_ = std::move(entries);
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("RMatrix: ragged initializer list");
    std::size_t j = 0;
    for (const auto& v : r) (*this)(i, j++) = v;
    ++i;
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

bool RMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool RMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

RMatrix RMatrix::slice(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw IndexOutOfRange("slice exceeds " + shape(*this));
  }
  RMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  }
  return out;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  require_same_shape(a, b, "add");
  RMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  return out;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
  require_same_shape(a, b, "subtract");
  RMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  return out;
}

RMatrix operator-(const RMatrix& a) {
  RMatrix out = a;
  for (auto& e : out.entries()) e = -e;
  return out;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: " + shape(a) + " * " + shape(b));
  RMatrix out(a.rows(), b.cols());
  kernels::multiply(a, b, out);
  return out;
}

RMatrix operator*(const Rational& s, const RMatrix& a) {
  RMatrix out = a;
  for (auto& e : out.entries()) e *= s;
  return out;
}

RMatrix transpose(const RMatrix& a) {
  RMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

RowEchelon row_reduce(const RMatrix& a) {
  RMatrix work = a;
  std::vector<std::size_t> pivots;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < m; ++col) {
    std::size_t p = lead;
    while (p < m && work(p, col).is_zero()) ++p;
    if (p == m) continue;
    if (p != lead) {
      for (std::size_t k = col; k < n; ++k) std::swap(work(p, k), work(lead, k));
    }
    const Rational scale = Rational(1) / work(lead, col);
    for (std::size_t k = col; k < n; ++k) work(lead, k) *= scale;
    kernels::eliminate_column(work.entries(), m, n, lead, col, col);
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(work), std::move(pivots)};
}

std::size_t rank(const RMatrix& a) { return row_reduce(a).pivot_cols.size(); }

RMatrix inverse(const RMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse: non-square " + shape(a));
  const std::size_t n = a.rows();
  const std::size_t w = 2 * n;
  RMatrix aug(n, w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug(p, col).is_zero()) ++p;
    if (p == n) throw SingularMatrix("inverse: matrix " + shape(a) + " is singular");
    if (p != col) {
      for (std::size_t k = 0; k < w; ++k) std::swap(aug(p, k), aug(col, k));
    }
    const Rational scale = Rational(1) / aug(col, col);
    for (std::size_t k = col; k < w; ++k) aug(col, k) *= scale;
    kernels::eliminate_column(aug.entries(), n, w, col, col, col);
  }
  return aug.slice(0, n, n, n);
}

RMatrix power(const RMatrix& a, std::size_t k) {
  if (!a.is_square()) throw DimensionMismatch("power: non-square " + shape(a));
  RMatrix result = RMatrix::identity(a.rows());
  RMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

RMatrix vstack(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: " + shape(a) + " over " + shape(b));
  RMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

// --- Blocks ---------------------------------------------------------------

namespace {

struct Extent {
  std::optional<std::size_t> value;

  void merge(std::size_t v, const char* what) {
    if (value && *value != v) {
      throw DimensionMismatch(std::string("block_compose: inconsistent ") + what + " (" +
                              std::to_string(*value) + " vs " + std::to_string(v) + ")");
    }
    value = v;
  }
  std::size_t get() const { return value.value_or(0); }
};

}  // namespace

RMatrix block_compose(const Block& x0, const Block& x1, const Block& x2, const Block& x3) {
  Extent top, bottom, left, right;
  if (x0) { top.merge(x0->rows(), "top height"); left.merge(x0->cols(), "left width"); }
  if (x1) { top.merge(x1->rows(), "top height"); right.merge(x1->cols(), "right width"); }
  if (x2) { bottom.merge(x2->rows(), "bottom height"); left.merge(x2->cols(), "left width"); }
  if (x3) { bottom.merge(x3->rows(), "bottom height"); right.merge(x3->cols(), "right width"); }

  const std::size_t h0 = top.get(), h1 = bottom.get(), w0 = left.get(), w1 = right.get();
  const auto check_absent = [](const Block& b, std::size_t h, std::size_t w, const char* name) {
    if (!b && h > 0 && w > 0) {
      throw DimensionMismatch(std::string("block_compose: block ") + name + " is absent but would be " +
                              std::to_string(h) + "x" + std::to_string(w));
    }
  };
  check_absent(x0, h0, w0, "X0");
  check_absent(x1, h0, w1, "X1");
  check_absent(x2, h1, w0, "X2");
  check_absent(x3, h1, w1, "X3");
  if (h0 + h1 == 0 || w0 + w1 == 0) throw DimensionMismatch("block_compose: all blocks absent");

  RMatrix out(h0 + h1, w0 + w1);
  const auto place = [&out](const Block& b, std::size_t r0, std::size_t c0) {
    if (!b) return;
    for (std::size_t i = 0; i < b->rows(); ++i) {
      for (std::size_t j = 0; j < b->cols(); ++j) out(r0 + i, c0 + j) = (*b)(i, j);
    }
  };
  place(x0, 0, 0);
  place(x1, 0, w0);
  place(x2, h0, 0);
  place(x3, h0, w0);
  return out;
}

BlockQuad block_extract(const RMatrix& a, std::size_t row_split, std::size_t col_split) {
  if (row_split > a.rows() || col_split > a.cols()) {
    throw IndexOutOfRange("block_extract: split (" + std::to_string(row_split) + "," +
                          std::to_string(col_split) + ") outside " + shape(a));
  }
  const std::size_t h1 = a.rows() - row_split;
  const std::size_t w1 = a.cols() - col_split;
  const auto cut = [&a](std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) -> Block {
    if (h == 0 || w == 0) return absent;
    return a.slice(r0, c0, h, w);
  };
  return {cut(0, 0, row_split, col_split), cut(0, col_split, row_split, w1),
          cut(row_split, 0, h1, col_split), cut(row_split, col_split, h1, w1)};
}

BlockQuad block_extract(const RMatrix& a, std::size_t split) {
  if (split > std::min(a.rows(), a.cols())) {
    throw IndexOutOfRange("block_extract: split " + std::to_string(split) + " exceeds min dimension of " +
                          shape(a));
  }
  return block_extract(a, split, split);
}

}  // namespace ginv
