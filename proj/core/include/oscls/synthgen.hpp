#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "oscls/dataset.hpp"

namespace oscls {

enum class PeakShape { Gaussian, Lorentzian };

struct PeakSpec {
  double center = 0.0;     // channel index
  double width = 1.0;      // channels
  double amplitude = 1.0;
  PeakShape shape = PeakShape::Gaussian;
};

struct ComponentLibrary {
  std::map<std::string, std::vector<PeakSpec>> components;
  std::size_t channel_count = 0;
  std::set<std::string> chlorinated_names;
};

struct ArityCounts {
  int chlorinated = 0;
  int non_chlorinated = 0;
};

struct SynthConfig {
  std::size_t channel_count = 512;
  /// counts[i] holds the instance counts for mixtures of arity i+1.
  std::vector<ArityCounts> counts;
  double noise_sigma = 0.04;
  double baseline_amplitude = 0.05;
  std::uint64_t seed = 1;

  /// Pure 6/24, binary 96/23, ternary 40/12, quaternary 12/10, quintary 0/7:
  /// 154 targets + 76 outliers = 230 instances.
  static SynthConfig reference_composition();

  static SynthConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Deterministic component library: n_components components with random peak
/// sets, the first n_chlorinated marked chlorinated.
ComponentLibrary gen_library(std::uint64_t seed, int n_components,
                             std::pair<int, int> peaks_per_component,
                             std::size_t channel_count, int n_chlorinated);

/// The noiseless spectrum of one library component.
Spectrum component_profile(const ComponentLibrary& library,
                           const std::string& name);

/// Convex mixture of component profiles plus a smooth random baseline and
/// zero-mean noise, clipped at 0. Label is Target iff any chlorinated
/// component has positive weight; materials lists the nonzero components.
LabeledInstance gen_mixture(const ComponentLibrary& library,
                            const std::map<std::string, double>& weights,
                            double noise_sigma, double baseline_amplitude,
                            std::uint64_t seed);

/// Dataset matching the configured per-arity class counts.
Dataset gen_dataset(const ComponentLibrary& library, const SynthConfig& config);

/// The out-of-distribution component library behind gen_unexpected: disjoint
/// names, fewer and much broader bands than the primary library.
ComponentLibrary unexpected_library(std::uint64_t seed, std::size_t channel_count);

/// n out-of-distribution outlier spectra, all Outlier / Unexpected.
Dataset gen_unexpected(std::uint64_t seed, int n, std::size_t channel_count);

}  // namespace oscls
