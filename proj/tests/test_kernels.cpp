// The OpenMP kernels must agree entry-for-entry with the serial reference,
// both below and above the parallel threshold.

#include <gtest/gtest.h>
#include <omp.h>

#include "ginv/kernels.hpp"
#include "ginv/matrix.hpp"
#include "support/corpus.hpp"

using namespace ginv;

namespace {

void gauss_jordan(RMatrix& work, bool parallel) {
  const std::size_t m = work.rows(), n = work.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < m; ++col) {
    std::size_t p = lead;
    while (p < m && work(p, col).is_zero()) ++p;
    if (p == m) continue;
    for (std::size_t k = 0; k < n; ++k) std::swap(work(p, k), work(lead, k));
    const Rational scale = Rational(1) / work(lead, col);
    for (std::size_t k = col; k < n; ++k) work(lead, k) *= scale;
    if (parallel) {
      kernels::eliminate_column(work.entries(), m, n, lead, col, col);
    } else {
      kernels::serial::eliminate_column(work.entries(), m, n, lead, col, col);
    }
    ++lead;
  }
}

}  // namespace

TEST(Kernels, MultiplyMatchesSerialAcrossThreshold) {
  corpus::Generator gen(11);
  for (std::size_t n : {1u, 3u, 7u, 16u, 24u, 40u}) {
    const RMatrix a = gen.dense(n, n + 1), b = gen.dense(n + 1, n);
    RMatrix par(n, n), ser(n, n);
    kernels::multiply(a, b, par);
    kernels::serial::multiply(a, b, ser);
    EXPECT_EQ(par, ser) << "n=" << n;
  }
}

TEST(Kernels, EliminationMatchesSerialAcrossThreshold) {
  corpus::Generator gen(12);
  for (std::size_t n : {2u, 5u, 20u, 48u, 70u}) {
    RMatrix base = gen.rank_deficient(n, n + 3);
    RMatrix par = base, ser = base;
    gauss_jordan(par, true);
    gauss_jordan(ser, false);
    EXPECT_EQ(par, ser) << "n=" << n;
  }
}

TEST(Kernels, ResultsIndependentOfThreadCount) {
  corpus::Generator gen(13);
  const RMatrix a = gen.dense(40, 40), b = gen.dense(40, 40);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const RMatrix one = a * b;
  omp_set_num_threads(4);
  const RMatrix four = a * b;
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
}
