#include "report.hpp"

#include "covdeg/partitions.hpp"
#include "covdeg/poincare.hpp"
#include "covdeg/series.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace covdeg;

namespace {

std::vector<ExactRational> random_coeffs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  std::vector<ExactRational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    v.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return v;
}

template <bool Parallel> void BM_CauchyProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(parallel::cauchy_product(a, b, n - 1));
    else
      benchmark::DoNotOptimize(serial::cauchy_product(a, b, n - 1));
  }
}

template <bool Parallel> void BM_CovariantSeries(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(parallel::covariant_series(d, 120));
    else
      benchmark::DoNotOptimize(serial::covariant_series(d, 120));
  }
}

template <bool Parallel> void BM_DimRange(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(parallel::dim_covariants_range(d, 60));
    else
      benchmark::DoNotOptimize(serial::dim_covariants_range(d, 60));
  }
}

template <bool Parallel> void BM_VerifyRange(benchmark::State& state) {
  const int last = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(parallel::verify_range(1, last));
    else
      benchmark::DoNotOptimize(serial::verify_range(1, last));
  }
}

} // namespace

BENCHMARK(BM_CauchyProduct<false>)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CauchyProduct<true>)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CovariantSeries<false>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CovariantSeries<true>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DimRange<false>)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DimRange<true>)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyRange<false>)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyRange<true>)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
