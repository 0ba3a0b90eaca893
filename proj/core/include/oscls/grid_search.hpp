#pragma once

#include <cstdint>
#include <vector>

#include "oscls/algorithm.hpp"
#include "oscls/dataset.hpp"

namespace oscls {

struct GridSearchResult {
  std::size_t chosen = 0;          // index into the algorithm's grid
  std::vector<double> cv_errors;   // mean held-out error % per grid entry
  std::vector<bool> flagged;       // entry hit an unfittable fold (scored 100%)
};

/// Seeded, label-stratified k-fold cross-validation over the algorithm's
/// parameter grid. Returns the entry with the smallest mean held-out error;
/// ties resolve to the first entry in grid order. A fold that cannot be
/// fitted assigns that grid entry an error of 100% and flags it.
GridSearchResult grid_search_cv(const Dataset& train, const Algorithm& algorithm,
                                int folds, std::uint64_t seed);

}  // namespace oscls
