#include <benchmark/benchmark.h>

#include "padic/number.hpp"
#include "padic/rng.hpp"

using namespace padic;

namespace {

std::vector<PAdicNumber> random_values(std::uint32_t p, int digits, int count,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PAdicNumber> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(digits), 0);
    for (auto& x : d) x = rng.digit(p);
    auto v = PAdicNumber::from_absolute_digits(p, d);
    if (v.is_regular()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

static void BM_Add(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const auto vals = random_values(3, digits, 64, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vals[i % 64] + vals[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_Add)->Arg(32)->Arg(128)->Arg(512);

static void BM_Mul(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const auto vals = random_values(3, digits, 64, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vals[i % 64] * vals[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_Mul)->Arg(32)->Arg(128)->Arg(512);

static void BM_Div(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const auto vals = random_values(5, digits, 64, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vals[i % 64] / vals[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_Div)->Arg(32)->Arg(128);

static void BM_FromRational(benchmark::State& state) {
  long long n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(PAdicNumber::from_rational(n, 2 * n + 1, 7, PrecisionPolicy(64, 0)));
    n = n % 100000 + 1;
  }
}
BENCHMARK(BM_FromRational);
