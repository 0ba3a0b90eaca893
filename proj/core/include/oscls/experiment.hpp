#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oscls/algorithm.hpp"
#include "oscls/dataset.hpp"
#include "oscls/metrics.hpp"

namespace oscls {

struct AlgoRunResult {
  std::string algorithm;
  nlohmann::json chosen_params;
  ConfusionMatrix scenario1;  // held-out test set only
  ConfusionMatrix scenario2;  // test set plus the unexpected set
};

struct RunResult {
  int run_index = 0;
  std::uint64_t seed = 0;
  std::string split_hash;  // shared-split contract witness
  std::vector<AlgoRunResult> per_algorithm;
};

struct ScenarioSummary {
  double mean_error_percent = 0.0;
  double std_dev_percent = 0.0;  // sample standard deviation (n - 1)
};

struct AlgoSummary {
  std::string algorithm;
  ScenarioSummary scenario1;
  ScenarioSummary scenario2;
};

struct ExperimentSummary {
  std::vector<RunResult> runs;
  std::vector<AlgoSummary> summaries;
  nlohmann::json config;  // echo of the inputs that produced the runs
};

struct ExperimentOptions {
  int n_runs = 10;
  std::uint64_t seed0 = 1;
  double train_fraction = 0.67;
  int folds = 3;
  /// Called after each (run, algorithm) evaluation, in deterministic order.
  std::function<void(const RunResult&, const AlgoRunResult&)> progress;
};

/// The two-scenario protocol: for run i, seed = seed0 + i drives one
/// stratified split shared by every algorithm; each algorithm is tuned by
/// internal cross-validation on the training set, fitted, then evaluated on
/// the held-out test set (Scenario 1) and on the same test set augmented
/// with the unexpected instances (Scenario 2).
ExperimentSummary run_experiment(const Dataset& primary, const Dataset& unexpected,
                                 const std::vector<const Algorithm*>& algorithms,
                                 const ExperimentOptions& options);

/// Plain-text table, one row per algorithm, cells formatted "6.49 (2.03)".
std::string summarize_table(const ExperimentSummary& summary);

std::string format_cell(double mean, double std_dev);

nlohmann::json experiment_to_json(const ExperimentSummary& summary);

nlohmann::json confusion_to_json(const ConfusionMatrix& cm);

}  // namespace oscls
