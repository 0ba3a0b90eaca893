// Command-line front-end: synthesize spectra, run the two-scenario
// experiment protocol, tune, train and apply classifiers.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oscls/algorithm.hpp"
#include "oscls/csv.hpp"
#include "oscls/errors.hpp"
#include "oscls/experiment.hpp"
#include "oscls/grid_search.hpp"
#include "oscls/model_io.hpp"
#include "oscls/split.hpp"
#include "oscls/synthgen.hpp"

namespace {

using nlohmann::json;
using namespace oscls;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ArgumentError("cannot open file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ArgumentError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Dataset load_normalized(const std::string& path) {
  return normalize_dataset(load_csv(path));
}

std::vector<OkNNParams> oknn_grid_from_json(const json& j) {
  std::vector<OkNNParams> grid;
  const Metric metric =
      parse_metric(j.value("metric", std::string("cosine")));
  for (int m : j.at("m").get<std::vector<int>>()) {
    for (int k : j.at("k").get<std::vector<int>>()) {
      for (double theta : j.at("threshold").get<std::vector<double>>()) {
        grid.push_back({m, k, theta, metric});
      }
    }
  }
  return grid;
}

std::vector<Knn2Params> knn2_grid_from_json(const json& j) {
  std::vector<Knn2Params> grid;
  const Metric metric =
      parse_metric(j.value("metric", std::string("euclidean")));
  for (int k : j.at("k").get<std::vector<int>>()) {
    grid.push_back({k, metric});
  }
  return grid;
}

std::vector<SvmParams> svm_grid_from_json(const json& j) {
  std::vector<SvmParams> grid;
  for (double c : j.at("c").get<std::vector<double>>()) {
    SvmParams p;
    p.c = c;
    p.tolerance = j.value("tolerance", p.tolerance);
    p.max_passes = j.value("max_passes", p.max_passes);
    grid.push_back(p);
  }
  return grid;
}

std::unique_ptr<Algorithm> make_algorithm(const std::string& name,
                                          const json& grids) {
  if (name == "oknn") {
    if (grids.contains("oknn")) {
      return std::make_unique<OknnAlgorithm>(oknn_grid_from_json(grids.at("oknn")));
    }
    return std::make_unique<OknnAlgorithm>(OknnAlgorithm::default_grid());
  }
  if (name == "knn2") {
    if (grids.contains("knn2")) {
      return std::make_unique<Knn2Algorithm>(knn2_grid_from_json(grids.at("knn2")));
    }
    return std::make_unique<Knn2Algorithm>(Knn2Algorithm::default_grid());
  }
  if (name == "svm") {
    if (grids.contains("svm")) {
      return std::make_unique<SvmAlgorithm>(svm_grid_from_json(grids.at("svm")));
    }
    return std::make_unique<SvmAlgorithm>(SvmAlgorithm::default_grid());
  }
  throw ArgumentError("unknown algorithm: '" + name + "'");
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> names;
  std::istringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) names.push_back(name);
  }
  return names;
}

struct ExperimentCli {
  std::string data_path;
  std::string unexpected_path;
  std::string algos = "oknn,knn2,svm";
  int runs = 10;
  std::uint64_t seed = 1;
  double train_frac = 0.67;
  int folds = 3;
  std::string grid_file;
  std::string out_json;
  std::string out_table;
  std::string config_file;
  std::uint64_t synth_seed = 1;
  int unexpected_n = 48;
};

int cmd_experiment(ExperimentCli opts) {
  if (!opts.config_file.empty()) {
    // config file overrides flags
    const json cfg = read_json_file(opts.config_file);
    opts.data_path = cfg.value("data", opts.data_path);
    opts.unexpected_path = cfg.value("unexpected", opts.unexpected_path);
    opts.algos = cfg.value("algos", opts.algos);
    opts.runs = cfg.value("runs", opts.runs);
    opts.seed = cfg.value("seed", opts.seed);
    opts.train_frac = cfg.value("train_frac", opts.train_frac);
    opts.folds = cfg.value("folds", opts.folds);
    opts.grid_file = cfg.value("grid_file", opts.grid_file);
    opts.out_json = cfg.value("out_json", opts.out_json);
    opts.out_table = cfg.value("out_table", opts.out_table);
    opts.synth_seed = cfg.value("synth_seed", opts.synth_seed);
    opts.unexpected_n = cfg.value("unexpected_n", opts.unexpected_n);
  }

  Dataset primary;
  Dataset unexpected;
  if (opts.data_path.empty()) {
    // default synthetic stand-in for the reference composition
    const auto library = gen_library(opts.synth_seed, 25, {2, 5}, 512, 6);
    SynthConfig cfg = SynthConfig::reference_composition();
    cfg.seed = opts.synth_seed;
    primary = normalize_dataset(gen_dataset(library, cfg));
    unexpected = normalize_dataset(
        gen_unexpected(opts.synth_seed + 1000, opts.unexpected_n, 512));
  } else {
    primary = load_normalized(opts.data_path);
    if (!opts.unexpected_path.empty()) {
      unexpected = load_normalized(opts.unexpected_path);
    } else {
      unexpected.channel_count = primary.channel_count;
    }
  }

  json grids = json::object();
  if (!opts.grid_file.empty()) {
    grids = read_json_file(opts.grid_file);
  }
  std::vector<std::unique_ptr<Algorithm>> owned;
  std::vector<const Algorithm*> algorithms;
  for (const auto& name : split_names(opts.algos)) {
    owned.push_back(make_algorithm(name, grids));
    algorithms.push_back(owned.back().get());
  }
  if (algorithms.empty()) {
    throw ArgumentError("no algorithms selected");
  }

  ExperimentOptions eo;
  eo.n_runs = opts.runs;
  eo.seed0 = opts.seed;
  eo.train_fraction = opts.train_frac;
  eo.folds = opts.folds;
  eo.progress = [](const RunResult& rr, const AlgoRunResult& ar) {
    const auto report = [&](const char* scenario, const ConfusionMatrix& cm) {
      const Metrics m = compute_metrics(cm);
      std::cout << "run " << rr.run_index << " [" << ar.algorithm << "] "
                << scenario << ": error " << m.error_percent << "%";
      if (m.sensitivity) std::cout << ", sensitivity " << *m.sensitivity;
      if (m.specificity) std::cout << ", specificity " << *m.specificity;
      std::cout << ", confusion tp=" << cm.tp << " fn=" << cm.fn
                << " fp=" << cm.fp << " tn=" << cm.tn << '\n';
    };
    report("scenario1", ar.scenario1);
    report("scenario2", ar.scenario2);
  };

  const ExperimentSummary summary =
      run_experiment(primary, unexpected, algorithms, eo);

  const std::string table = summarize_table(summary);
  std::cout << '\n' << table;
  if (!opts.out_json.empty()) {
    std::ofstream out(opts.out_json);
    if (!out) throw ArgumentError("cannot open file: " + opts.out_json);
    out << experiment_to_json(summary).dump(2) << '\n';
  }
  if (!opts.out_table.empty()) {
    std::ofstream out(opts.out_table);
    if (!out) throw ArgumentError("cannot open file: " + opts.out_table);
    out << table;
  }
  return 0;
}

struct SynthCli {
  std::string out = "primary.csv";
  std::string out_unexpected = "unexpected.csv";
  std::uint64_t seed = 1;
  std::size_t channels = 512;
  int unexpected_n = 48;
  std::string config_file;
};

int cmd_synth(const SynthCli& opts) {
  SynthConfig cfg = SynthConfig::reference_composition();
  cfg.seed = opts.seed;
  cfg.channel_count = opts.channels;
  if (!opts.config_file.empty()) {
    cfg = SynthConfig::from_json(read_json_file(opts.config_file));
  }
  const auto library = gen_library(cfg.seed, 25, {2, 5}, cfg.channel_count, 6);
  const Dataset primary = gen_dataset(library, cfg);
  write_csv(primary, opts.out);
  const Dataset unexpected =
      gen_unexpected(cfg.seed + 1000, opts.unexpected_n, cfg.channel_count);
  write_csv(unexpected, opts.out_unexpected);
  std::cout << "wrote " << primary.size() << " instances ("
            << primary.target_count() << " targets) to " << opts.out << '\n'
            << "wrote " << unexpected.size() << " unexpected outliers to "
            << opts.out_unexpected << '\n';
  return 0;
}

int cmd_train(const std::string& algo, const std::string& data_path,
              const std::string& params_text, const std::string& model_out) {
  const Dataset train = load_normalized(data_path);
  json p = json::object();
  if (!params_text.empty()) {
    try {
      p = json::parse(params_text);
    } catch (const json::exception& e) {
      throw ArgumentError(std::string("invalid --params JSON: ") + e.what());
    }
  }
  AnyModel model = [&]() -> AnyModel {
    if (algo == "oknn") {
      OkNNParams params;
      params.m = p.value("m", params.m);
      params.k = p.value("k", params.k);
      params.threshold = p.value("threshold", params.threshold);
      params.metric = parse_metric(p.value("metric", std::string("cosine")));
      std::vector<Spectrum> targets;
      for (const auto& inst : train.instances) {
        if (inst.label == Label::Target) targets.push_back(inst.spectrum);
      }
      return OkNNModel::fit(std::move(targets), params);
    }
    if (algo == "knn2") {
      Knn2Params params;
      params.k = p.value("k", params.k);
      params.metric = parse_metric(p.value("metric", std::string("euclidean")));
      return Knn2Model::fit(train, params);
    }
    if (algo == "svm") {
      SvmParams params;
      params.c = p.value("c", params.c);
      params.tolerance = p.value("tolerance", params.tolerance);
      params.max_passes = p.value("max_passes", params.max_passes);
      return svm_fit(train, params);
    }
    throw ArgumentError("unknown algorithm: '" + algo + "'");
  }();
  save_model(model, model_out);
  std::cout << "saved " << algo << " model to " << model_out << '\n';
  return 0;
}

int cmd_predict(const std::string& model_path, const std::string& data_path) {
  const AnyModel model = load_model(model_path);
  const Dataset data = load_normalized(data_path);
  for (std::size_t i = 0; i < data.instances.size(); ++i) {
    const Spectrum& x = data.instances[i].spectrum;
    std::cout << i << ' ';
    if (const auto* oknn = std::get_if<OkNNModel>(&model)) {
      const OkNNDecision d = oknn->predict(x);
      std::cout << to_string(d.accepted ? Label::Target : Label::Outlier)
                << " d1=" << d.d1 << " d2=" << d.d2 << " ratio=" << d.ratio;
    } else if (const auto* knn2 = std::get_if<Knn2Model>(&model)) {
      std::cout << to_string(knn2->predict(x));
    } else {
      const auto [label, margin] = std::get<SvmModel>(model).predict(x);
      std::cout << to_string(label) << " margin=" << margin;
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_tune(const std::string& algo, const std::string& data_path,
             const std::string& grid_file, int folds, std::uint64_t seed) {
  const Dataset train = load_normalized(data_path);
  json grids = json::object();
  if (!grid_file.empty()) grids = read_json_file(grid_file);
  const auto algorithm = make_algorithm(algo, grids);
  const GridSearchResult result = grid_search_cv(train, *algorithm, folds, seed);
  json out = {{"algorithm", algo},
              {"chosen_params", algorithm->param_json(result.chosen)},
              {"cv_error_percent", result.cv_errors[result.chosen]}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-sided classification toolkit for spectral data"};
  app.require_subcommand(1);

  ExperimentCli exp;
  auto* experiment = app.add_subcommand(
      "experiment", "Run the two-scenario multi-run experiment protocol");
  experiment->add_option("--data", exp.data_path,
                         "Primary dataset CSV (omit to use synthetic data)");
  experiment->add_option("--unexpected", exp.unexpected_path,
                         "Unexpected-outlier CSV for Scenario 2");
  experiment->add_option("--algos", exp.algos, "Comma list of oknn,knn2,svm");
  experiment->add_option("--runs", exp.runs, "Number of runs");
  experiment->add_option("--seed", exp.seed, "Base seed (run i uses seed + i)");
  experiment->add_option("--train-frac", exp.train_frac, "Training fraction");
  experiment->add_option("--folds", exp.folds, "Internal CV folds");
  experiment->add_option("--grid-file", exp.grid_file, "Parameter grid JSON");
  experiment->add_option("--out-json", exp.out_json, "Results JSON path");
  experiment->add_option("--out-table", exp.out_table, "Results table path");
  experiment->add_option("--config", exp.config_file,
                         "JSON config; overrides the flags above");
  experiment->add_option("--synth-seed", exp.synth_seed,
                         "Seed for the synthetic data (no --data)");
  experiment->add_option("--unexpected-n", exp.unexpected_n,
                         "Synthetic unexpected set size (no --data)");

  SynthCli synth;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate synthetic spectra CSV files");
  synth_cmd->add_option("--out", synth.out, "Primary dataset CSV path");
  synth_cmd->add_option("--out-unexpected", synth.out_unexpected,
                        "Unexpected set CSV path");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed");
  synth_cmd->add_option("--channels", synth.channels, "Channel count");
  synth_cmd->add_option("--unexpected-n", synth.unexpected_n,
                        "Unexpected set size");
  synth_cmd->add_option("--config", synth.config_file, "Synth config JSON");

  std::string train_algo, train_data, train_params, train_model_out;
  auto* train_cmd = app.add_subcommand("train", "Fit one classifier and save it");
  train_cmd->add_option("--algo", train_algo, "oknn, knn2 or svm")->required();
  train_cmd->add_option("--data", train_data, "Training CSV")->required();
  train_cmd->add_option("--params", train_params, "Parameter JSON object");
  train_cmd->add_option("--model-out", train_model_out, "Model file path")
      ->required();

  std::string predict_model, predict_data;
  auto* predict_cmd =
      app.add_subcommand("predict", "Classify a CSV with a saved model");
  predict_cmd->add_option("--model", predict_model, "Model file")->required();
  predict_cmd->add_option("--data", predict_data, "Input CSV")->required();

  std::string tune_algo, tune_data, tune_grid;
  int tune_folds = 3;
  std::uint64_t tune_seed = 1;
  auto* tune_cmd =
      app.add_subcommand("tune", "Cross-validated grid search on a training CSV");
  tune_cmd->add_option("--algo", tune_algo, "oknn, knn2 or svm")->required();
  tune_cmd->add_option("--data", tune_data, "Training CSV")->required();
  tune_cmd->add_option("--grid-file", tune_grid, "Parameter grid JSON");
  tune_cmd->add_option("--folds", tune_folds, "CV folds");
  tune_cmd->add_option("--seed", tune_seed, "Fold seed");

  try {
    app.parse(argc, argv);
    if (experiment->parsed()) return cmd_experiment(exp);
    if (synth_cmd->parsed()) return cmd_synth(synth);
    if (train_cmd->parsed()) {
      return cmd_train(train_algo, train_data, train_params, train_model_out);
    }
    if (predict_cmd->parsed()) return cmd_predict(predict_model, predict_data);
    if (tune_cmd->parsed()) {
      return cmd_tune(tune_algo, tune_data, tune_grid, tune_folds, tune_seed);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
