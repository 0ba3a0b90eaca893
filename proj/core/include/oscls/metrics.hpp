#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "oscls/dataset.hpp"

namespace oscls {

struct ConfusionMatrix {
  std::size_t tp = 0;  // positive = Target
  std::size_t fn = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fn + fp + tn; }
};

struct Metrics {
  double error_percent = 0.0;
  std::optional<double> sensitivity;  // absent when tp + fn == 0
  std::optional<double> specificity;  // absent when tn + fp == 0
};

/// Counts every test instance into exactly one cell by
/// (true label, predicted label).
ConfusionMatrix evaluate(const std::function<Label(const Spectrum&)>& predict,
                         const Dataset& test);

/// error = 100 * (fp + fn) / total. Ratios with a zero denominator are
/// reported as absent, never as 0.
Metrics compute_metrics(const ConfusionMatrix& cm);

}  // namespace oscls
