#include "oscls/algorithm.hpp"

#include <utility>

#include "oscls/errors.hpp"

namespace oscls {

namespace {

class OknnClassifier : public Classifier {
 public:
  explicit OknnClassifier(OkNNModel model) : model_(std::move(model)) {}
  Label predict(const Spectrum& x) const override {
    return model_.predict(x).accepted ? Label::Target : Label::Outlier;
  }

 private:
  OkNNModel model_;
};

class Knn2Classifier : public Classifier {
 public:
  explicit Knn2Classifier(Knn2Model model) : model_(std::move(model)) {}
  Label predict(const Spectrum& x) const override { return model_.predict(x); }

 private:
  Knn2Model model_;
};

class SvmClassifier : public Classifier {
 public:
  explicit SvmClassifier(SvmModel model) : model_(std::move(model)) {}
  Label predict(const Spectrum& x) const override {
    return model_.predict(x).first;
  }

 private:
  SvmModel model_;
};

}  // namespace

OknnAlgorithm::OknnAlgorithm(std::vector<OkNNParams> grid) : grid_(std::move(grid)) {
  if (grid_.empty()) throw ArgumentError("oknn: empty parameter grid");
}

OknnAlgorithm OknnAlgorithm::default_grid() {
  std::vector<OkNNParams> grid;
  for (int m : {1, 2}) {
    for (int k : {1, 2}) {
      for (double theta : {1.0, 1.5, 2.0}) {
        grid.push_back({m, k, theta, Metric::Cosine});
      }
    }
  }
  return OknnAlgorithm(std::move(grid));
}

nlohmann::json OknnAlgorithm::param_json(std::size_t index) const {
  const auto& p = grid_.at(index);
  return {{"m", p.m},
          {"k", p.k},
          {"threshold", p.threshold},
          {"metric", to_string(p.metric)}};
}

std::unique_ptr<Classifier> OknnAlgorithm::fit(const Dataset& train,
                                               std::size_t index) const {
  std::vector<Spectrum> targets;
  for (const auto& inst : train.instances) {
    if (inst.label == Label::Target) targets.push_back(inst.spectrum);
  }
  return std::make_unique<OknnClassifier>(
      OkNNModel::fit(std::move(targets), grid_.at(index)));
}

Knn2Algorithm::Knn2Algorithm(std::vector<Knn2Params> grid) : grid_(std::move(grid)) {
  if (grid_.empty()) throw ArgumentError("knn2: empty parameter grid");
}

Knn2Algorithm Knn2Algorithm::default_grid() {
  return Knn2Algorithm({{1, Metric::Euclidean},
                        {2, Metric::Euclidean},
                        {3, Metric::Euclidean}});
}

nlohmann::json Knn2Algorithm::param_json(std::size_t index) const {
  const auto& p = grid_.at(index);
  return {{"k", p.k}, {"metric", to_string(p.metric)}};
}

std::unique_ptr<Classifier> Knn2Algorithm::fit(const Dataset& train,
                                               std::size_t index) const {
  return std::make_unique<Knn2Classifier>(Knn2Model::fit(train, grid_.at(index)));
}

SvmAlgorithm::SvmAlgorithm(std::vector<SvmParams> grid) : grid_(std::move(grid)) {
  if (grid_.empty()) throw ArgumentError("svm: empty parameter grid");
}

SvmAlgorithm SvmAlgorithm::default_grid() {
  std::vector<SvmParams> grid;
  for (double c : {1.0, 3.0, 5.0}) {
    SvmParams p;
    p.c = c;
    grid.push_back(p);
  }
  return SvmAlgorithm(std::move(grid));
}

nlohmann::json SvmAlgorithm::param_json(std::size_t index) const {
  const auto& p = grid_.at(index);
  return {{"c", p.c}, {"tolerance", p.tolerance}, {"max_passes", p.max_passes}};
}

std::unique_ptr<Classifier> SvmAlgorithm::fit(const Dataset& train,
                                              std::size_t index) const {
  return std::make_unique<SvmClassifier>(svm_fit(train, grid_.at(index)));
}

}  // namespace oscls
