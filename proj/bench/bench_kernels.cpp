#include "sqv/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

sqv::QMatrix random_matrix(std::size_t r, std::size_t c, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  sqv::QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      sqv::Q x(num(rng), den(rng));
      x.canonicalize();
      m(i, j) = x;
    }
  return m;
}

void BM_MultiplySerial(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(sqv::kernels::multiply_serial(a, b));
}

void BM_MultiplyParallel(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(sqv::kernels::multiply_parallel(a, b));
}

void BM_RrefSerial(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_matrix(n, n + 4, 3);
  for (auto _ : st) benchmark::DoNotOptimize(sqv::kernels::rref_serial(a));
}

void BM_RrefParallel(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_matrix(n, n + 4, 3);
  for (auto _ : st) benchmark::DoNotOptimize(sqv::kernels::rref_parallel(a));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_MultiplyParallel)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_RrefSerial)->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(BM_RrefParallel)->RangeMultiplier(2)->Range(8, 32);

BENCHMARK_MAIN();
