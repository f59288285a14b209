#include <benchmark/benchmark.h>

#include "padic/training.hpp"

using namespace padic;

namespace {

Dataset planted(std::uint32_t p, int n, int count, int m) {
  return generate(TargetSpec::parse("mahler:5,3,7,9", p), n, count, p, m, 42);
}

}  // namespace

static void BM_Loss(benchmark::State& state) {
  const auto data = planted(2, 2, static_cast<int>(state.range(0)), 16);
  const PrecisionPolicy policy(16, 8);
  std::vector<PAdicNumber> w;
  for (long long v : {1, 2, 3, 4}) w.push_back(PAdicNumber::from_integer(v, 2, policy));
  const RegressionModel model(2, 2, MahlerSeries{2, w}, policy);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loss(model, data, Partition::All));
  }
}
BENCHMARK(BM_Loss)->Arg(12)->Arg(64)->Arg(256);

static void BM_StochasticSteps(benchmark::State& state) {
  const auto data = planted(2, 2, 12, 16);
  for (auto _ : state) {
    TrainerConfig cfg;
    cfg.degree = 3;
    cfg.steps = state.range(0);
    cfg.seed = 7;
    benchmark::DoNotOptimize(fit_stochastic(data, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StochasticSteps)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_FitExact(benchmark::State& state) {
  const auto data = planted(3, 2, static_cast<int>(state.range(0)), 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_exact(data, 12));
  }
}
BENCHMARK(BM_FitExact)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
