#include "oscls/grid_search.hpp"

#include <algorithm>

#include "oscls/errors.hpp"
#include "oscls/metrics.hpp"
#include "oscls/rng.hpp"

namespace oscls {

GridSearchResult grid_search_cv(const Dataset& train, const Algorithm& algorithm,
                                int folds, std::uint64_t seed) {
  if (folds < 2) {
    throw ArgumentError("grid_search_cv: folds must be >= 2");
  }
  const std::size_t n = train.instances.size();
  if (n < static_cast<std::size_t>(folds)) {
    throw ArgumentError("grid_search_cv: fewer instances than folds");
  }

  // Label-stratified fold assignment: shuffle each class with the seeded
  // generator, then deal round-robin.
  std::vector<int> fold_of(n, 0);
  SeededRng rng(seed);
  for (Label label : {Label::Target, Label::Outlier}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (train.instances[i].label == label) idx.push_back(i);
    }
    rng.shuffle(idx);
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      fold_of[idx[pos]] = static_cast<int>(pos % static_cast<std::size_t>(folds));
    }
  }

  GridSearchResult result;
  result.cv_errors.assign(algorithm.grid_size(), 0.0);
  result.flagged.assign(algorithm.grid_size(), false);

  for (std::size_t entry = 0; entry < algorithm.grid_size(); ++entry) {
    double error_sum = 0.0;
    int fold_count = 0;
    for (int f = 0; f < folds; ++f) {
      Dataset fit_part, eval_part;
      fit_part.channel_count = eval_part.channel_count = train.channel_count;
      for (std::size_t i = 0; i < n; ++i) {
        (fold_of[i] == f ? eval_part : fit_part).instances.push_back(
            train.instances[i]);
      }
      if (eval_part.instances.empty()) continue;
      ++fold_count;
      try {
        const auto model = algorithm.fit(fit_part, entry);
        const auto cm = evaluate(
            [&](const Spectrum& x) { return model->predict(x); }, eval_part);
        error_sum += compute_metrics(cm).error_percent;
      } catch (const TrainingError&) {
        error_sum += 100.0;
        result.flagged[entry] = true;
      }
    }
    result.cv_errors[entry] = error_sum / static_cast<double>(fold_count);
  }

  // smallest mean error, first in grid order on ties
  result.chosen = 0;
  for (std::size_t entry = 1; entry < result.cv_errors.size(); ++entry) {
    if (result.cv_errors[entry] < result.cv_errors[result.chosen]) {
      result.chosen = entry;
    }
  }
  return result;
}

}  // namespace oscls
