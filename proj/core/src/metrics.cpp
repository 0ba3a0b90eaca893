#include "oscls/metrics.hpp"

#include "oscls/errors.hpp"

namespace oscls {

ConfusionMatrix evaluate(const std::function<Label(const Spectrum&)>& predict,
                         const Dataset& test) {
  if (test.instances.empty()) {
    throw ArgumentError("evaluate: empty test set");
  }
  ConfusionMatrix cm;
  for (const auto& inst : test.instances) {
    const Label predicted = predict(inst.spectrum);
    if (inst.label == Label::Target) {
      (predicted == Label::Target ? cm.tp : cm.fn) += 1;
    } else {
      (predicted == Label::Target ? cm.fp : cm.tn) += 1;
    }
  }
  return cm;
}

Metrics compute_metrics(const ConfusionMatrix& cm) {
  const std::size_t total = cm.total();
  if (total == 0) {
    throw ArgumentError("compute_metrics: empty confusion matrix");
  }
  Metrics m;
  m.error_percent =
      100.0 * static_cast<double>(cm.fp + cm.fn) / static_cast<double>(total);
  if (cm.tp + cm.fn > 0) {
    m.sensitivity = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
  }
  if (cm.tn + cm.fp > 0) {
    m.specificity = static_cast<double>(cm.tn) / static_cast<double>(cm.tn + cm.fp);
  }
  return m;
}

}  // namespace oscls
