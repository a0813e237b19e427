#include "kpieri/pieri.hpp"
#include "kpieri/verify.hpp"

#include <benchmark/benchmark.h>

using namespace kpieri;

namespace {

// (G_w0 + G_w) for w0 longest in S_n, times G_(3)(x_1..x_{n-1}).
void product_args(benchmark::State& state, Polynomial& f, Polynomial& g) {
  const int n = static_cast<int>(state.range(0));
  f = grothendieck_polynomial(Permutation::longest(n)) +
      grothendieck_polynomial(permutation_of_code({1, 2, 0, 1, 1}));
  g = grothendieck_row(3, n - 1);
}

void BM_mul_serial(benchmark::State& state) {
  Polynomial f, g;
  product_args(state, f, g);
  for (auto _ : state)
    benchmark::DoNotOptimize(mul_serial(f, g));
}

void BM_mul_parallel(benchmark::State& state) {
  Polynomial f, g;
  product_args(state, f, g);
  for (auto _ : state)
    benchmark::DoNotOptimize(mul_parallel(f, g));
}

void enumerate(benchmark::State& state, bool parallel) {
  EnumerationOptions options;
  options.parallel = parallel;
  const Permutation v = Permutation::parse("21543");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int p = 1; p <= k; ++p)
      benchmark::DoNotOptimize(enumerate_pieri_chains(v, k, p, options));
}

void BM_chains_serial(benchmark::State& state) { enumerate(state, false); }
void BM_chains_parallel(benchmark::State& state) { enumerate(state, true); }

void grid(benchmark::State& state, bool parallel) {
  GridOptions options;
  options.parallel = parallel;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_e_formula(n, n - 1, options));
}

void BM_e_grid_serial(benchmark::State& state) { grid(state, false); }
void BM_e_grid_parallel(benchmark::State& state) { grid(state, true); }

} // namespace

BENCHMARK(BM_mul_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_chains_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_chains_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_e_grid_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_e_grid_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
