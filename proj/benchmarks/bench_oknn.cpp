#include <benchmark/benchmark.h>

#include <vector>

#include "oscls/oknn.hpp"
#include "oscls/rng.hpp"

using namespace oscls;

namespace {

std::vector<Spectrum> random_targets(std::size_t n, std::size_t channels) {
  SeededRng rng(2);
  std::vector<Spectrum> targets(n);
  for (auto& s : targets) {
    s.resize(channels);
    for (double& v : s) v = rng.uniform(0.01, 1.0);
  }
  return targets;
}

void BM_oknn_fit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto targets = random_targets(n, 512);
  OkNNParams p;
  p.m = 2;
  p.k = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(OkNNModel::fit(targets, p));
  }
}

void BM_oknn_predict(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto targets = random_targets(n, 512);
  OkNNParams p;
  p.m = 2;
  p.k = 2;
  const auto model = OkNNModel::fit(targets, p);
  SeededRng rng(3);
  Spectrum x(512);
  for (double& v : x) v = rng.uniform(0.01, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.predict(x));
  }
}

}  // namespace

BENCHMARK(BM_oknn_fit)->Arg(50)->Arg(103)->Arg(200);
BENCHMARK(BM_oknn_predict)->Arg(50)->Arg(103)->Arg(200);
