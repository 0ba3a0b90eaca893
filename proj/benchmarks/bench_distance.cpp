#include <benchmark/benchmark.h>

#include "oscls/distance.hpp"
#include "oscls/rng.hpp"

using namespace oscls;

namespace {

Spectrum random_spectrum(SeededRng& rng, std::size_t channels) {
  Spectrum s(channels);
  for (double& v : s) v = rng.uniform(0.01, 1.0);
  return s;
}

void BM_cosine_distance(benchmark::State& state) {
  SeededRng rng(1);
  const auto channels = static_cast<std::size_t>(state.range(0));
  const Spectrum a = random_spectrum(rng, channels);
  const Spectrum b = random_spectrum(rng, channels);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cosine_distance(a, b));
  }
}

void BM_euclidean_distance(benchmark::State& state) {
  SeededRng rng(1);
  const auto channels = static_cast<std::size_t>(state.range(0));
  const Spectrum a = random_spectrum(rng, channels);
  const Spectrum b = random_spectrum(rng, channels);
  for (auto _ : state) {
    benchmark::DoNotOptimize(euclidean_distance(a, b));
  }
}

}  // namespace

BENCHMARK(BM_cosine_distance)->Arg(128)->Arg(512)->Arg(2048);
BENCHMARK(BM_euclidean_distance)->Arg(128)->Arg(512)->Arg(2048);
