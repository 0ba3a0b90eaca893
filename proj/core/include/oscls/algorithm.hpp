#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oscls/dataset.hpp"
#include "oscls/knn2.hpp"
#include "oscls/oknn.hpp"
#include "oscls/svm.hpp"

namespace oscls {

/// A fitted classifier, reduced to the one thing the harness needs.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Label predict(const Spectrum& x) const = 0;
};

/// One tunable algorithm: a name plus an ordered parameter grid. Grid order
/// is significant (ties in cross-validation resolve to the first entry).
class Algorithm {
 public:
  virtual ~Algorithm() = default;
  virtual std::string name() const = 0;
  virtual std::size_t grid_size() const = 0;
  virtual nlohmann::json param_json(std::size_t index) const = 0;
  /// Fits grid entry `index` on `train`. Throws TrainingError when the fit
  /// preconditions fail (too few targets, single-class data).
  virtual std::unique_ptr<Classifier> fit(const Dataset& train,
                                          std::size_t index) const = 0;
};

class OknnAlgorithm : public Algorithm {
 public:
  explicit OknnAlgorithm(std::vector<OkNNParams> grid);
  /// m, k in {1, 2}; threshold in {1, 1.5, 2}; cosine metric.
  static OknnAlgorithm default_grid();

  std::string name() const override { return "oknn"; }
  std::size_t grid_size() const override { return grid_.size(); }
  nlohmann::json param_json(std::size_t index) const override;
  std::unique_ptr<Classifier> fit(const Dataset& train,
                                  std::size_t index) const override;
  const std::vector<OkNNParams>& grid() const { return grid_; }

 private:
  std::vector<OkNNParams> grid_;
};

class Knn2Algorithm : public Algorithm {
 public:
  explicit Knn2Algorithm(std::vector<Knn2Params> grid);
  /// k in {1, 2, 3}, Euclidean metric.
  static Knn2Algorithm default_grid();

  std::string name() const override { return "knn2"; }
  std::size_t grid_size() const override { return grid_.size(); }
  nlohmann::json param_json(std::size_t index) const override;
  std::unique_ptr<Classifier> fit(const Dataset& train,
                                  std::size_t index) const override;
  const std::vector<Knn2Params>& grid() const { return grid_; }

 private:
  std::vector<Knn2Params> grid_;
};

class SvmAlgorithm : public Algorithm {
 public:
  explicit SvmAlgorithm(std::vector<SvmParams> grid);
  /// C in {1, 3, 5}.
  static SvmAlgorithm default_grid();

  std::string name() const override { return "svm"; }
  std::size_t grid_size() const override { return grid_.size(); }
  nlohmann::json param_json(std::size_t index) const override;
  std::unique_ptr<Classifier> fit(const Dataset& train,
                                  std::size_t index) const override;
  const std::vector<SvmParams>& grid() const { return grid_; }

 private:
  std::vector<SvmParams> grid_;
};

}  // namespace oscls
