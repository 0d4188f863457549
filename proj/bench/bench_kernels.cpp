// Serial reference kernels against their OpenMP counterparts on random
// rational matrices. Run with OMP_NUM_THREADS=<n> to vary the thread count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "ginv/kernels.hpp"
#include "ginv/matrix.hpp"

namespace {

ginv::RMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  ginv::RMatrix a(n, n);
  for (auto& e : a.entries()) e = ginv::Rational(num(rng), den(rng));
  return a;
}

template <auto Multiply>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1);
  const auto b = random_matrix(n, 2);
  ginv::RMatrix out(n, n);
  for (auto _ : state) {
    Multiply(a, b, out);
    benchmark::DoNotOptimize(out);
  }
  state.counters["threads"] = omp_get_max_threads();
}

// One full Gauss-Jordan sweep; the grid is rebuilt outside the timed region.
template <auto Eliminate>
void BM_Eliminate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 3);
  for (auto _ : state) {
    state.PauseTiming();
    auto work = a;
    state.ResumeTiming();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t p = col;
      while (p < n && work(p, col).is_zero()) ++p;
      if (p == n) continue;
      for (std::size_t k = 0; k < n; ++k) std::swap(work(p, k), work(col, k));
      const ginv::Rational scale = ginv::Rational(1) / work(col, col);
      for (std::size_t k = col; k < n; ++k) work(col, k) *= scale;
      Eliminate(work.entries(), n, n, col, col, col);
    }
    benchmark::DoNotOptimize(work);
  }
}

constexpr auto kSerialMul = &ginv::kernels::serial::multiply;
constexpr auto kParallelMul = &ginv::kernels::multiply;
constexpr auto kSerialElim = &ginv::kernels::serial::eliminate_column;
constexpr auto kParallelElim = &ginv::kernels::eliminate_column;

}  // namespace

BENCHMARK(BM_Multiply<kSerialMul>)->Name("multiply/serial")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_Multiply<kParallelMul>)->Name("multiply/omp")->RangeMultiplier(2)->Range(8, 64)->UseRealTime();
BENCHMARK(BM_Eliminate<kSerialElim>)->Name("gauss_jordan/serial")->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(BM_Eliminate<kParallelElim>)->Name("gauss_jordan/omp")->RangeMultiplier(2)->Range(8, 32)->UseRealTime();

BENCHMARK_MAIN();
