#include <benchmark/benchmark.h>

#include "oscls/rng.hpp"
#include "oscls/svm.hpp"

using namespace oscls;

namespace {

Dataset cluster_dataset(std::size_t n_per_class, std::size_t channels) {
  SeededRng rng(4);
  Dataset d;
  d.channel_count = channels;
  for (std::size_t i = 0; i < 2 * n_per_class; ++i) {
    LabeledInstance inst;
    const bool target = i < n_per_class;
    inst.label = target ? Label::Target : Label::Outlier;
    inst.spectrum.resize(channels);
    for (double& v : inst.spectrum) {
      v = (target ? 0.3 : 0.7) + rng.uniform(-0.2, 0.2);
    }
    d.instances.push_back(std::move(inst));
  }
  return d;
}

void BM_svm_fit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dataset train = cluster_dataset(n, 512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svm_fit(train, SvmParams{}));
  }
}

}  // namespace

BENCHMARK(BM_svm_fit)->Arg(25)->Arg(77)->Unit(benchmark::kMillisecond);
