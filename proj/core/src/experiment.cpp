#include "oscls/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "oscls/errors.hpp"
#include "oscls/grid_search.hpp"
#include "oscls/rng.hpp"
#include "oscls/split.hpp"

namespace oscls {

namespace {

std::optional<double> error_of(const ConfusionMatrix& cm) {
  if (cm.total() == 0) return std::nullopt;
  return compute_metrics(cm).error_percent;
}

ScenarioSummary summarize_errors(const std::vector<double>& errors) {
  ScenarioSummary s;
  const auto n = static_cast<double>(errors.size());
  for (double e : errors) s.mean_error_percent += e;
  s.mean_error_percent /= n;
  if (errors.size() > 1) {
    double ss = 0.0;
    for (double e : errors) {
      const double d = e - s.mean_error_percent;
      ss += d * d;
    }
    s.std_dev_percent = std::sqrt(ss / (n - 1.0));
  }
  return s;
}

}  // namespace

ExperimentSummary run_experiment(const Dataset& primary, const Dataset& unexpected,
                                 const std::vector<const Algorithm*>& algorithms,
                                 const ExperimentOptions& options) {
  if (algorithms.empty()) {
    throw ArgumentError("run_experiment: no algorithms given");
  }
  if (options.n_runs < 1) {
    throw ArgumentError("run_experiment: n_runs must be >= 1");
  }
  for (const auto& inst : unexpected.instances) {
    if (inst.provenance != Provenance::Unexpected) {
      throw ArgumentError("run_experiment: unexpected set has Expected provenance");
    }
  }

  ExperimentSummary summary;
  summary.config = {{"n_runs", options.n_runs},
                    {"seed0", options.seed0},
                    {"train_fraction", options.train_fraction},
                    {"folds", options.folds},
                    {"primary_size", primary.size()},
                    {"unexpected_size", unexpected.size()},
                    {"channel_count", primary.channel_count},
                    {"rng", SeededRng::kVersion}};
  nlohmann::json algos_json = nlohmann::json::array();
  for (const auto* algo : algorithms) {
    nlohmann::json grid = nlohmann::json::array();
    for (std::size_t i = 0; i < algo->grid_size(); ++i) {
      grid.push_back(algo->param_json(i));
    }
    algos_json.push_back({{"name", algo->name()}, {"grid", grid}});
  }
  summary.config["algorithms"] = algos_json;

  for (int run = 0; run < options.n_runs; ++run) {
    const std::uint64_t seed = options.seed0 + static_cast<std::uint64_t>(run);
    RunResult rr;
    rr.run_index = run;
    rr.seed = seed;
    try {
      // one split per run, shared by every algorithm
      const auto [train, test] =
          stratified_split(primary, options.train_fraction, seed);
      const Dataset augmented = augment_with_unexpected(test, unexpected);
      rr.split_hash = dataset_hash(train) + ":" + dataset_hash(test);

      for (const auto* algo : algorithms) {
        AlgoRunResult ar;
        ar.algorithm = algo->name();
        const auto gs = grid_search_cv(train, *algo, options.folds, seed);
        ar.chosen_params = algo->param_json(gs.chosen);
        const auto model = algo->fit(train, gs.chosen);
        const auto predict = [&](const Spectrum& x) { return model->predict(x); };
        ar.scenario1 = evaluate(predict, test);
        ar.scenario2 = evaluate(predict, augmented);
        if (options.progress) options.progress(rr, ar);
        rr.per_algorithm.push_back(std::move(ar));
      }
    } catch (const Error& e) {
      throw Error("run " + std::to_string(run) + " failed: " + e.what());
    }
    summary.runs.push_back(std::move(rr));
  }

  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    AlgoSummary as;
    as.algorithm = algorithms[a]->name();
    std::vector<double> e1, e2;
    for (const auto& rr : summary.runs) {
      e1.push_back(*error_of(rr.per_algorithm[a].scenario1));
      e2.push_back(*error_of(rr.per_algorithm[a].scenario2));
    }
    as.scenario1 = summarize_errors(e1);
    as.scenario2 = summarize_errors(e2);
    summary.summaries.push_back(std::move(as));
  }
  return summary;
}

std::string format_cell(double mean, double std_dev) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f (%.2f)", mean, std_dev);
  return buf;
}

std::string summarize_table(const ExperimentSummary& summary) {
  if (summary.summaries.empty()) {
    throw ArgumentError("summarize_table: empty summary");
  }
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %-22s %-22s\n", "Algorithm",
                "Scenario 1", "Scenario 2");
  out << line;
  std::snprintf(line, sizeof(line), "%-12s %-22s %-22s\n", "",
                "Error % (std. dev.)", "Error % (std. dev.)");
  out << line;
  for (const auto& as : summary.summaries) {
    std::snprintf(line, sizeof(line), "%-12s %-22s %-22s\n", as.algorithm.c_str(),
                  format_cell(as.scenario1.mean_error_percent,
                              as.scenario1.std_dev_percent)
                      .c_str(),
                  format_cell(as.scenario2.mean_error_percent,
                              as.scenario2.std_dev_percent)
                      .c_str());
    out << line;
  }
  return out.str();
}

nlohmann::json confusion_to_json(const ConfusionMatrix& cm) {
  const Metrics m = compute_metrics(cm);
  nlohmann::json j{{"tp", cm.tp},       {"fn", cm.fn},
                   {"fp", cm.fp},       {"tn", cm.tn},
                   {"error_percent", m.error_percent}};
  j["sensitivity"] = m.sensitivity ? nlohmann::json(*m.sensitivity)
                                   : nlohmann::json(nullptr);
  j["specificity"] = m.specificity ? nlohmann::json(*m.specificity)
                                   : nlohmann::json(nullptr);
  return j;
}

nlohmann::json experiment_to_json(const ExperimentSummary& summary) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& rr : summary.runs) {
    nlohmann::json algos = nlohmann::json::array();
    for (const auto& ar : rr.per_algorithm) {
      algos.push_back({{"name", ar.algorithm},
                       {"chosen_params", ar.chosen_params},
                       {"scenario1", confusion_to_json(ar.scenario1)},
                       {"scenario2", confusion_to_json(ar.scenario2)}});
    }
    runs.push_back({{"run_index", rr.run_index},
                    {"seed", rr.seed},
                    {"split_hash", rr.split_hash},
                    {"algorithms", algos}});
  }
  nlohmann::json sums = nlohmann::json::array();
  for (const auto& as : summary.summaries) {
    sums.push_back(
        {{"algorithm", as.algorithm},
         {"scenario1",
          {{"mean_error_percent", as.scenario1.mean_error_percent},
           {"std_dev_percent", as.scenario1.std_dev_percent}}},
         {"scenario2",
          {{"mean_error_percent", as.scenario2.mean_error_percent},
           {"std_dev_percent", as.scenario2.std_dev_percent}}}});
  }
  return {{"config", summary.config}, {"runs", runs}, {"summary", sums}};
}

}  // namespace oscls
