#include "oscls/model_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "oscls/errors.hpp"

namespace oscls {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json oknn_to_json(const OkNNModel& m) {
  return json{{"kind", "oknn"},
              {"format_version", kFormatVersion},
              {"params",
               {{"m", m.params().m},
                {"k", m.params().k},
                {"threshold", m.params().threshold},
                {"metric", to_string(m.params().metric)}}},
              {"targets", m.targets()},
              {"d2_per_target", m.d2_per_target()}};
}

json knn2_to_json(const Knn2Model& m) {
  std::vector<std::string> labels;
  labels.reserve(m.labels().size());
  for (Label l : m.labels()) labels.push_back(to_string(l));
  return json{{"kind", "knn2"},
              {"format_version", kFormatVersion},
              {"params",
               {{"k", m.params().k}, {"metric", to_string(m.params().metric)}}},
              {"spectra", m.spectra()},
              {"labels", labels}};
}

json svm_to_json(const SvmModel& m) {
  json alphas = json::array();
  for (const auto& [index, value] : m.support_alphas) {
    alphas.push_back({{"index", index}, {"alpha", value}});
  }
  return json{{"kind", "svm"},
              {"format_version", kFormatVersion},
              {"weights", m.weights},
              {"bias", m.bias},
              {"support_alphas", alphas}};
}

OkNNModel oknn_from_json(const json& j) {
  OkNNParams p;
  p.m = j.at("params").at("m").get<int>();
  p.k = j.at("params").at("k").get<int>();
  p.threshold = j.at("params").at("threshold").get<double>();
  p.metric = parse_metric(j.at("params").at("metric").get<std::string>());
  return OkNNModel::from_parts(j.at("targets").get<std::vector<Spectrum>>(),
                               j.at("d2_per_target").get<std::vector<double>>(), p);
}

Knn2Model knn2_from_json(const json& j) {
  Knn2Params p;
  p.k = j.at("params").at("k").get<int>();
  p.metric = parse_metric(j.at("params").at("metric").get<std::string>());
  std::vector<Label> labels;
  for (const auto& token : j.at("labels")) {
    labels.push_back(parse_label(token.get<std::string>()));
  }
  return Knn2Model::from_parts(j.at("spectra").get<std::vector<Spectrum>>(),
                               std::move(labels), p);
}

SvmModel svm_from_json(const json& j) {
  SvmModel m;
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  for (const auto& entry : j.at("support_alphas")) {
    m.support_alphas.emplace_back(entry.at("index").get<std::size_t>(),
                                  entry.at("alpha").get<double>());
  }
  return m;
}

}  // namespace

void save_model(const AnyModel& model, const std::string& path) {
  json j = std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, OkNNModel>) return oknn_to_json(m);
        else if constexpr (std::is_same_v<T, Knn2Model>) return knn2_to_json(m);
        else return svm_to_json(m);
      },
      model);
  std::ofstream out(path);
  if (!out) {
    throw PersistenceError("cannot open model file for writing: " + path);
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw PersistenceError("model write failed: " + path);
  }
}

AnyModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw PersistenceError("cannot open model file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PersistenceError("corrupted model file " + path + ": " + e.what());
  }
  try {
    const auto kind = j.at("kind").get<std::string>();
    const int version = j.at("format_version").get<int>();
    if (version != kFormatVersion) {
      throw PersistenceError("unsupported model format version " +
                             std::to_string(version) + " in " + path);
    }
    if (kind == "oknn") return oknn_from_json(j);
    if (kind == "knn2") return knn2_from_json(j);
    if (kind == "svm") return svm_from_json(j);
    throw PersistenceError("unknown model kind '" + kind + "' in " + path);
  } catch (const json::exception& e) {
    throw PersistenceError("corrupted model file " + path + ": " + e.what());
  }
}

}  // namespace oscls
