#include "oscls/oknn.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "oscls/errors.hpp"

namespace oscls {

namespace {

void check_params(const OkNNParams& p) {
  if (p.m < 1 || p.k < 1) {
    throw ArgumentError("oknn: m and k must be >= 1");
  }
  if (!(p.threshold > 0.0)) {
    throw ArgumentError("oknn: threshold must be positive");
  }
}

/// Indices of the n nearest candidates, distance ties broken by lower index.
std::vector<std::size_t> nearest(const std::vector<std::pair<double, std::size_t>>& dists,
                                 std::size_t n) {
  auto sorted = dists;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n && i < sorted.size(); ++i) {
    out.push_back(sorted[i].second);
  }
  return out;
}

}  // namespace

OkNNModel OkNNModel::fit(std::vector<Spectrum> targets, const OkNNParams& params) {
  check_params(params);
  const std::size_t required =
      static_cast<std::size_t>(std::max(params.m, params.k)) + 1;
  if (targets.size() < required) {
    throw TrainingError("oknn: need at least " + std::to_string(required) +
                        " target instances, got " + std::to_string(targets.size()));
  }

  OkNNModel model;
  model.params_ = params;
  model.targets_ = std::move(targets);
  const auto& t = model.targets_;

  model.d2_per_target_.resize(t.size());
  std::vector<std::pair<double, std::size_t>> dists;
  for (std::size_t i = 0; i < t.size(); ++i) {
    dists.clear();
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j == i) continue;
      dists.emplace_back(metric_distance(params.metric, t[i], t[j]), j);
    }
    const auto nn = nearest(dists, static_cast<std::size_t>(params.k));
    double sum = 0.0;
    for (std::size_t j : nn) {
      sum += metric_distance(params.metric, t[i], t[j]);
    }
    model.d2_per_target_[i] = sum / static_cast<double>(nn.size());
  }
  return model;
}

OkNNModel OkNNModel::from_parts(std::vector<Spectrum> targets,
                                std::vector<double> d2_per_target,
                                const OkNNParams& params) {
  check_params(params);
  if (targets.size() != d2_per_target.size()) {
    throw ArgumentError("oknn: targets and d2_per_target size mismatch");
  }
  OkNNModel model;
  model.params_ = params;
  model.targets_ = std::move(targets);
  model.d2_per_target_ = std::move(d2_per_target);
  return model;
}

OkNNDecision OkNNModel::predict(const Spectrum& x) const {
  if (!targets_.empty() && x.size() != targets_.front().size()) {
    throw ShapeError("oknn: query has " + std::to_string(x.size()) +
                     " channels, model expects " +
                     std::to_string(targets_.front().size()));
  }

  std::vector<std::pair<double, std::size_t>> dists;
  dists.reserve(targets_.size());
  for (std::size_t j = 0; j < targets_.size(); ++j) {
    dists.emplace_back(metric_distance(params_.metric, x, targets_[j]), j);
  }
  const auto nn = nearest(dists, static_cast<std::size_t>(params_.m));

  double d1 = 0.0;
  double d2 = 0.0;
  for (std::size_t j : nn) {
    d1 += metric_distance(params_.metric, x, targets_[j]);
    d2 += d2_per_target_[j];
  }
  d1 /= static_cast<double>(nn.size());
  d2 /= static_cast<double>(nn.size());

  OkNNDecision decision;
  decision.d1 = d1;
  decision.d2 = d2;
  if (d2 == 0.0) {
    // zero-radius target cluster: accept only exact members
    decision.accepted = (d1 == 0.0);
    decision.ratio =
        decision.accepted ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    decision.ratio = d1 / d2;
    decision.accepted = (decision.ratio <= params_.threshold);
  }
  return decision;
}

}  // namespace oscls
