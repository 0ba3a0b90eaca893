#include "oscls/knn2.hpp"

#include <algorithm>
#include <utility>

#include "oscls/errors.hpp"

namespace oscls {

Knn2Model Knn2Model::fit(const Dataset& train, const Knn2Params& params) {
  if (params.k < 1) {
    throw ArgumentError("knn2: k must be >= 1");
  }
  if (train.instances.empty()) {
    throw TrainingError("knn2: empty training set");
  }
  if (static_cast<std::size_t>(params.k) > train.instances.size()) {
    throw TrainingError("knn2: k exceeds training set size");
  }
  Knn2Model model;
  model.params_ = params;
  model.spectra_.reserve(train.instances.size());
  model.labels_.reserve(train.instances.size());
  for (const auto& inst : train.instances) {
    model.spectra_.push_back(inst.spectrum);
    model.labels_.push_back(inst.label);
  }
  return model;
}

Knn2Model Knn2Model::from_parts(std::vector<Spectrum> spectra,
                                std::vector<Label> labels,
                                const Knn2Params& params) {
  if (spectra.size() != labels.size()) {
    throw ArgumentError("knn2: spectra and labels size mismatch");
  }
  Knn2Model model;
  model.params_ = params;
  model.spectra_ = std::move(spectra);
  model.labels_ = std::move(labels);
  return model;
}

Label Knn2Model::predict(const Spectrum& x) const {
  if (!spectra_.empty() && x.size() != spectra_.front().size()) {
    throw ShapeError("knn2: query channel count mismatch");
  }
  std::vector<std::pair<double, std::size_t>> dists;
  dists.reserve(spectra_.size());
  for (std::size_t j = 0; j < spectra_.size(); ++j) {
    dists.emplace_back(metric_distance(params_.metric, x, spectra_[j]), j);
  }
  // distance ties resolve to the lower training-instance index
  std::sort(dists.begin(), dists.end());

  const std::size_t k = std::min(static_cast<std::size_t>(params_.k), dists.size());
  std::size_t targets = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (labels_[dists[i].second] == Label::Target) ++targets;
  }
  const std::size_t outliers = k - targets;
  if (targets == outliers) {
    // vote tie: the single nearest neighbour decides
    return labels_[dists.front().second];
  }
  return targets > outliers ? Label::Target : Label::Outlier;
}

}  // namespace oscls
