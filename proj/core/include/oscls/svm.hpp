#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oscls/dataset.hpp"

namespace oscls {

struct SvmParams {
  double c = 1.0;           // soft-margin complexity parameter
  double tolerance = 1e-3;  // KKT slack
  int max_passes = 10;      // consecutive no-progress sweeps before stopping
};

/// Linear soft-margin SVM, Target -> +1, Outlier -> -1.
struct SvmModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::vector<std::pair<std::size_t, double>> support_alphas;

  /// (label, margin) with margin = weights.x + bias; margin >= 0 -> Target.
  std::pair<Label, double> predict(const Spectrum& x) const;
};

/// Trains by sequential pairwise optimization of the dual (SMO with a linear
/// kernel) until no example violates the KKT conditions by more than the
/// tolerance for max_passes consecutive sweeps.
SvmModel svm_fit(const Dataset& train, const SvmParams& params);

}  // namespace oscls
