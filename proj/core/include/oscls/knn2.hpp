#pragma once

#include <vector>

#include "oscls/dataset.hpp"
#include "oscls/distance.hpp"

namespace oscls {

struct Knn2Params {
  int k = 1;
  Metric metric = Metric::Euclidean;
};

/// Conventional two-class k-NN. Majority label among the k nearest training
/// instances; vote ties go to the single nearest neighbour's label, distance
/// ties to the lower training-instance index.
class Knn2Model {
 public:
  static Knn2Model fit(const Dataset& train, const Knn2Params& params);
  static Knn2Model from_parts(std::vector<Spectrum> spectra,
                              std::vector<Label> labels,
                              const Knn2Params& params);

  Label predict(const Spectrum& x) const;

  const Knn2Params& params() const { return params_; }
  const std::vector<Spectrum>& spectra() const { return spectra_; }
  const std::vector<Label>& labels() const { return labels_; }

 private:
  Knn2Model() = default;

  Knn2Params params_;
  std::vector<Spectrum> spectra_;
  std::vector<Label> labels_;
};

}  // namespace oscls
