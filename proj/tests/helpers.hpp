#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "oscls/dataset.hpp"
#include "oscls/distance.hpp"
#include "oscls/rng.hpp"

namespace oscls::testing {

inline LabeledInstance make_instance(Spectrum s, Label label,
                                     Provenance prov = Provenance::Expected) {
  LabeledInstance inst;
  inst.spectrum = std::move(s);
  inst.label = label;
  inst.provenance = prov;
  return inst;
}

inline Dataset make_dataset(std::vector<LabeledInstance> instances) {
  Dataset d;
  d.channel_count = instances.empty() ? 0 : instances.front().spectrum.size();
  d.instances = std::move(instances);
  return d;
}

inline Spectrum random_spectrum(SeededRng& rng, std::size_t channels,
                                double lo = 0.0, double hi = 1.0) {
  Spectrum s(channels);
  for (double& v : s) v = rng.uniform(lo, hi);
  return s;
}

/// Two well-separated Gaussian-ish clusters, Target around `mu_t`, Outlier
/// around `mu_o`; linearly separable for cluster radii < |mu_t - mu_o| / 2.
inline Dataset two_cluster_dataset(SeededRng& rng, std::size_t n_target,
                                   std::size_t n_outlier, std::size_t channels,
                                   double mu_t, double mu_o, double radius) {
  std::vector<LabeledInstance> rows;
  for (std::size_t i = 0; i < n_target + n_outlier; ++i) {
    const bool target = i < n_target;
    Spectrum s(channels);
    for (double& v : s) {
      v = (target ? mu_t : mu_o) + rng.uniform(-radius, radius);
    }
    rows.push_back(make_instance(std::move(s),
                                 target ? Label::Target : Label::Outlier));
  }
  return make_dataset(std::move(rows));
}

/// Brute-force reference for the one-sided rule, written independently of
/// the production code: full distance matrix, explicit sorts, no reuse of
/// the model's precomputed state.
struct OracleDecision {
  double d1;
  double d2;
  bool accepted;
};

inline OracleDecision oknn_oracle(const std::vector<Spectrum>& targets,
                                  const Spectrum& x, int m, int k,
                                  double threshold, Metric metric) {
  const std::size_t n = targets.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) dist[i][j] = metric_distance(metric, targets[i], targets[j]);
    }
  }

  std::vector<std::pair<double, std::size_t>> to_query(n);
  for (std::size_t i = 0; i < n; ++i) {
    to_query[i] = {metric_distance(metric, x, targets[i]), i};
  }
  std::stable_sort(to_query.begin(), to_query.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first < b.first;
                     return a.second < b.second;
                   });

  double d1 = 0.0;
  double d2 = 0.0;
  for (int q = 0; q < m; ++q) {
    const std::size_t nb = to_query[static_cast<std::size_t>(q)].second;
    d1 += to_query[static_cast<std::size_t>(q)].first;

    std::vector<std::pair<double, std::size_t>> peers;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != nb) peers.push_back({dist[nb][j], j});
    }
    std::stable_sort(peers.begin(), peers.end(),
                     [](const auto& a, const auto& b) {
                       if (a.first != b.first) return a.first < b.first;
                       return a.second < b.second;
                     });
    double mean_nb = 0.0;
    for (int q2 = 0; q2 < k; ++q2) mean_nb += peers[static_cast<std::size_t>(q2)].first;
    d2 += mean_nb / k;
  }
  d1 /= m;
  d2 /= m;

  bool accepted;
  if (d2 == 0.0) {
    accepted = (d1 == 0.0);
  } else {
    accepted = (d1 / d2) <= threshold;
  }
  return {d1, d2, accepted};
}

}  // namespace oscls::testing
