#include <benchmark/benchmark.h>

#include "padic/embedding.hpp"
#include "padic/mahler.hpp"
#include "padic/rng.hpp"

using namespace padic;

static void BM_OmegaRow(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const PrecisionPolicy policy(32, 16);
  const auto x = PAdicNumber::from_integer(123456789, 3, policy);
  for (auto _ : state) {
    benchmark::DoNotOptimize(omega_row(degree, x, policy));
  }
}
BENCHMARK(BM_OmegaRow)->Arg(4)->Arg(8)->Arg(16);

static void BM_EvalSeries(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const PrecisionPolicy policy(32, 16);
  Rng rng(11);
  std::vector<PAdicNumber> w;
  for (int k = 0; k <= degree; ++k) {
    w.push_back(PAdicNumber::from_integer(static_cast<long long>(rng.bounded(1000)), 3, policy));
  }
  const MahlerSeries series{3, w};
  const auto x = PAdicNumber::from_integer(987654321, 3, policy);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_series(series, x, policy));
  }
}
BENCHMARK(BM_EvalSeries)->Arg(4)->Arg(8)->Arg(16);

static void BM_Interleave(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(13);
  std::vector<PAdicNumber> coords;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> d(32, 0);
    for (auto& x : d) x = rng.digit(3);
    coords.push_back(PAdicNumber::from_absolute_digits(3, d));
  }
  const PointND x(3, coords);
  for (auto _ : state) {
    benchmark::DoNotOptimize(interleave(x));
  }
}
BENCHMARK(BM_Interleave)->Arg(2)->Arg(4)->Arg(8);
