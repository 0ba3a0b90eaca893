#pragma once

#include <vector>

#include "oscls/dataset.hpp"
#include "oscls/distance.hpp"

namespace oscls {

struct OkNNParams {
  int m = 1;               // neighbours of the test example
  int k = 1;               // neighbours-of-neighbours
  double threshold = 1.5;  // acceptance threshold on d1/d2
  Metric metric = Metric::Cosine;
};

struct OkNNDecision {
  double d1 = 0.0;
  double d2 = 0.0;
  double ratio = 0.0;  // may be +infinity when d2 == 0 and d1 > 0
  bool accepted = false;
};

/// One-sided k-NN. Trains on target-class spectra only and accepts a query
/// when the mean distance to its m nearest stored targets (d1), divided by
/// those targets' mean distance to their own k nearest targets (d2), does
/// not exceed the threshold.
class OkNNModel {
 public:
  /// Precomputes d2 for every stored target. Requires
  /// |targets| >= max(m, k) + 1 so each neighbour has k neighbours of its own.
  static OkNNModel fit(std::vector<Spectrum> targets, const OkNNParams& params);

  /// Rebuilds a model from persisted fields without refitting.
  static OkNNModel from_parts(std::vector<Spectrum> targets,
                              std::vector<double> d2_per_target,
                              const OkNNParams& params);

  OkNNDecision predict(const Spectrum& x) const;

  const OkNNParams& params() const { return params_; }
  const std::vector<Spectrum>& targets() const { return targets_; }
  const std::vector<double>& d2_per_target() const { return d2_per_target_; }

 private:
  OkNNModel() = default;

  OkNNParams params_;
  std::vector<Spectrum> targets_;
  std::vector<double> d2_per_target_;
};

}  // namespace oscls
