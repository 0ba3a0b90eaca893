#include "oscls/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "oscls/errors.hpp"
#include "oscls/rng.hpp"

namespace oscls {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string component_name(const char* prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s_%02d", prefix, i);
  return buf;
}

std::vector<PeakSpec> random_peaks(SeededRng& rng, int n_peaks,
                                   std::size_t channel_count, double width_lo,
                                   double width_hi) {
  std::vector<PeakSpec> peaks;
  peaks.reserve(static_cast<std::size_t>(n_peaks));
  const auto span = static_cast<double>(channel_count);
  for (int p = 0; p < n_peaks; ++p) {
    PeakSpec peak;
    peak.center = rng.uniform(0.0, span);
    peak.width = rng.uniform(width_lo, width_hi) * span;
    peak.amplitude = rng.uniform(0.3, 1.0);
    peak.shape = rng.below(2) == 0 ? PeakShape::Gaussian : PeakShape::Lorentzian;
    peaks.push_back(peak);
  }
  return peaks;
}

ComponentLibrary make_library(SeededRng& rng, const char* prefix, int n_components,
                              std::pair<int, int> peaks_per_component,
                              std::size_t channel_count, int n_chlorinated,
                              double width_lo, double width_hi) {
  ComponentLibrary lib;
  lib.channel_count = channel_count;
  for (int i = 0; i < n_components; ++i) {
    const int lo = peaks_per_component.first;
    const int hi = peaks_per_component.second;
    const int n_peaks = lo + static_cast<int>(rng.below(
                                 static_cast<std::size_t>(hi - lo + 1)));
    const std::string name = component_name(prefix, i);
    lib.components[name] =
        random_peaks(rng, n_peaks, channel_count, width_lo, width_hi);
    if (i < n_chlorinated) lib.chlorinated_names.insert(name);
  }
  return lib;
}

std::vector<std::string> pick_distinct(SeededRng& rng,
                                       const std::vector<std::string>& pool,
                                       std::size_t n) {
  auto names = pool;
  rng.shuffle(names);
  names.resize(n);
  return names;
}

}  // namespace

SynthConfig SynthConfig::reference_composition() {
  SynthConfig c;
  c.counts = {{6, 24}, {96, 23}, {40, 12}, {12, 10}, {0, 7}};
  return c;
}

SynthConfig SynthConfig::from_json(const nlohmann::json& j) {
  SynthConfig c = reference_composition();
  if (j.contains("channel_count")) c.channel_count = j.at("channel_count");
  if (j.contains("noise_sigma")) c.noise_sigma = j.at("noise_sigma");
  if (j.contains("baseline_amplitude"))
    c.baseline_amplitude = j.at("baseline_amplitude");
  if (j.contains("seed")) c.seed = j.at("seed");
  if (j.contains("counts")) {
    c.counts.clear();
    for (const auto& row : j.at("counts")) {
      c.counts.push_back({row.at("chlorinated").get<int>(),
                          row.at("non_chlorinated").get<int>()});
    }
  }
  return c;
}

nlohmann::json SynthConfig::to_json() const {
  nlohmann::json counts_json = nlohmann::json::array();
  for (const auto& row : counts) {
    counts_json.push_back({{"chlorinated", row.chlorinated},
                           {"non_chlorinated", row.non_chlorinated}});
  }
  return {{"channel_count", channel_count},
          {"counts", counts_json},
          {"noise_sigma", noise_sigma},
          {"baseline_amplitude", baseline_amplitude},
          {"seed", seed}};
}

ComponentLibrary gen_library(std::uint64_t seed, int n_components,
                             std::pair<int, int> peaks_per_component,
                             std::size_t channel_count, int n_chlorinated) {
  if (channel_count < 16) {
    throw ArgumentError("gen_library: channel_count must be >= 16");
  }
  if (n_components < 2) {
    throw ArgumentError("gen_library: need at least 2 components");
  }
  if (peaks_per_component.first < 1 ||
      peaks_per_component.second < peaks_per_component.first) {
    throw ArgumentError("gen_library: invalid peaks_per_component range");
  }
  if (n_chlorinated < 0 || n_chlorinated > n_components) {
    throw ArgumentError("gen_library: invalid n_chlorinated");
  }
  SeededRng rng(seed);
  // solvent-like sharp bands: widths 1-5% of the channel span
  auto lib = make_library(rng, "comp", n_components, peaks_per_component,
                          channel_count, n_chlorinated, 0.01, 0.05);
  // chlorinated solvents are spectrally denser: extra bands on top of the
  // base peak set
  for (const auto& name : lib.chlorinated_names) {
    const int extra = 8 + static_cast<int>(rng.below(5));
    const auto more = random_peaks(rng, extra, channel_count, 0.01, 0.05);
    auto& peaks = lib.components[name];
    peaks.insert(peaks.end(), more.begin(), more.end());
  }
  // chlorinated solvents also share strong marker bands (their common
  // carbon-chlorine stretches), which is what makes the target class
  // well-characterized
  auto markers = random_peaks(rng, 2, channel_count, 0.01, 0.05);
  for (auto& marker : markers) {
    marker.amplitude = rng.uniform(0.8, 1.2);
  }
  for (const auto& name : lib.chlorinated_names) {
    auto& peaks = lib.components[name];
    for (PeakSpec marker : markers) {
      // per-solvent shift and intensity variation around the shared band
      marker.center += rng.uniform(-2.0, 2.0);
      marker.center = std::clamp(marker.center, 0.0,
                                 static_cast<double>(channel_count) - 1.0);
      marker.amplitude *= rng.uniform(0.8, 1.2);
      peaks.push_back(marker);
    }
  }
  return lib;
}

Spectrum component_profile(const ComponentLibrary& library,
                           const std::string& name) {
  const auto it = library.components.find(name);
  if (it == library.components.end()) {
    throw ArgumentError("unknown component: '" + name + "'");
  }
  Spectrum profile(library.channel_count, 0.0);
  for (const auto& peak : it->second) {
    for (std::size_t ch = 0; ch < profile.size(); ++ch) {
      const double t = (static_cast<double>(ch) - peak.center) / peak.width;
      if (peak.shape == PeakShape::Gaussian) {
        profile[ch] += peak.amplitude * std::exp(-0.5 * t * t);
      } else {
        profile[ch] += peak.amplitude / (1.0 + t * t);
      }
    }
  }
  return profile;
}

LabeledInstance gen_mixture(const ComponentLibrary& library,
                            const std::map<std::string, double>& weights,
                            double noise_sigma, double baseline_amplitude,
                            std::uint64_t seed) {
  if (weights.empty()) {
    throw ArgumentError("gen_mixture: no component weights");
  }
  double sum = 0.0;
  for (const auto& [name, w] : weights) {
    if (w < 0.0) throw ArgumentError("gen_mixture: negative weight for " + name);
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ArgumentError("gen_mixture: weights must sum to 1");
  }

  LabeledInstance inst;
  inst.spectrum.assign(library.channel_count, 0.0);
  bool any_chlorinated = false;
  for (const auto& [name, w] : weights) {
    if (w == 0.0) continue;
    const Spectrum profile = component_profile(library, name);
    for (std::size_t ch = 0; ch < inst.spectrum.size(); ++ch) {
      inst.spectrum[ch] += w * profile[ch];
    }
    inst.materials.push_back(name);
    if (library.chlorinated_names.count(name)) any_chlorinated = true;
  }
  inst.label = any_chlorinated ? Label::Target : Label::Outlier;

  SeededRng rng(seed);
  if (baseline_amplitude > 0.0) {
    // smooth pseudo-fluorescence background, bounded by baseline_amplitude
    const double amp = baseline_amplitude * rng.unit();
    const double freq = rng.uniform(0.25, 1.0);
    const double phase = rng.unit();
    const auto span = static_cast<double>(inst.spectrum.size());
    for (std::size_t ch = 0; ch < inst.spectrum.size(); ++ch) {
      const double t = static_cast<double>(ch) / span;
      inst.spectrum[ch] +=
          amp * 0.5 * (1.0 + std::sin(2.0 * kPi * (freq * t + phase)));
    }
  }
  if (noise_sigma > 0.0) {
    for (double& v : inst.spectrum) {
      v += noise_sigma * rng.normal();
    }
  }
  for (double& v : inst.spectrum) {
    v = std::max(v, 0.0);
  }
  return inst;
}

Dataset gen_dataset(const ComponentLibrary& library, const SynthConfig& config) {
  int total = 0;
  for (const auto& row : config.counts) {
    if (row.chlorinated < 0 || row.non_chlorinated < 0) {
      throw ArgumentError("gen_dataset: negative instance count");
    }
    total += row.chlorinated + row.non_chlorinated;
  }
  if (total == 0) {
    throw ArgumentError("gen_dataset: all instance counts are zero");
  }

  std::vector<std::string> chlorinated, non_chlorinated;
  for (const auto& [name, peaks] : library.components) {
    (library.chlorinated_names.count(name) ? chlorinated : non_chlorinated)
        .push_back(name);
  }

  SeededRng rng(config.seed);
  Dataset d;
  d.channel_count = library.channel_count;

  const auto emit = [&](std::size_t arity, bool with_chlorinated) {
    std::map<std::string, double> weights;
    std::vector<std::string> names;
    if (with_chlorinated) {
      if (chlorinated.empty() || non_chlorinated.size() < arity - 1) {
        throw ArgumentError("gen_dataset: arity " + std::to_string(arity) +
                            " exceeds available components");
      }
      names.push_back(chlorinated[rng.below(chlorinated.size())]);
      const auto rest = pick_distinct(rng, non_chlorinated, arity - 1);
      names.insert(names.end(), rest.begin(), rest.end());
    } else {
      if (non_chlorinated.size() < arity) {
        throw ArgumentError("gen_dataset: arity " + std::to_string(arity) +
                            " exceeds available non-chlorinated components");
      }
      names = pick_distinct(rng, non_chlorinated, arity);
    }
    if (with_chlorinated && names.size() > 1) {
      // the chlorinated solvent dominates its mixtures
      const double chlor_share = rng.uniform(0.6, 0.85);
      std::vector<double> raw(names.size() - 1);
      double sum = 0.0;
      for (double& w : raw) {
        w = rng.uniform(0.2, 1.0);
        sum += w;
      }
      weights[names[0]] = chlor_share;
      for (std::size_t i = 1; i < names.size(); ++i) {
        weights[names[i]] = (1.0 - chlor_share) * raw[i - 1] / sum;
      }
    } else {
      std::vector<double> raw(names.size());
      double sum = 0.0;
      for (double& w : raw) {
        w = rng.uniform(0.2, 1.0);
        sum += w;
      }
      for (std::size_t i = 0; i < names.size(); ++i) {
        weights[names[i]] = raw[i] / sum;
      }
    }
    d.instances.push_back(gen_mixture(library, weights, config.noise_sigma,
                                      config.baseline_amplitude, rng.next()));
  };

  for (std::size_t a = 0; a < config.counts.size(); ++a) {
    const std::size_t arity = a + 1;
    for (int i = 0; i < config.counts[a].chlorinated; ++i) emit(arity, true);
    for (int i = 0; i < config.counts[a].non_chlorinated; ++i) emit(arity, false);
  }
  return d;
}

ComponentLibrary unexpected_library(std::uint64_t seed, std::size_t channel_count) {
  if (channel_count < 16) {
    throw ArgumentError("unexpected_library: channel_count must be >= 16");
  }
  SeededRng rng(seed);
  // solids and salts: dominated by much broader bands than the solvent
  // library, with an occasional sharp lattice band on top
  ComponentLibrary lib;
  lib.channel_count = channel_count;
  for (int i = 0; i < 8; ++i) {
    const int n_broad = 1 + static_cast<int>(rng.below(3));
    const int n_sharp = static_cast<int>(rng.below(3));
    auto peaks = random_peaks(rng, n_broad, channel_count, 0.1, 0.25);
    const auto sharp = random_peaks(rng, n_sharp, channel_count, 0.01, 0.05);
    peaks.insert(peaks.end(), sharp.begin(), sharp.end());
    lib.components[component_name("unexp", i)] = std::move(peaks);
  }
  return lib;
}

Dataset gen_unexpected(std::uint64_t seed, int n, std::size_t channel_count) {
  if (n < 1) {
    throw ArgumentError("gen_unexpected: n must be >= 1");
  }
  const ComponentLibrary lib = unexpected_library(seed, channel_count);
  std::vector<std::string> names;
  for (const auto& [name, peaks] : lib.components) names.push_back(name);

  SeededRng rng(seed + 1);
  Dataset d;
  d.channel_count = channel_count;
  for (int i = 0; i < n; ++i) {
    const std::size_t arity = 1 + rng.below(2);
    const auto chosen = pick_distinct(rng, names, arity);
    std::map<std::string, double> weights;
    std::vector<double> raw(arity);
    double sum = 0.0;
    for (double& w : raw) {
      w = rng.uniform(0.2, 1.0);
      sum += w;
    }
    for (std::size_t c = 0; c < arity; ++c) {
      weights[chosen[c]] = raw[c] / sum;
    }
    // strong broad background, typical of solid-state fluorescence
    LabeledInstance inst = gen_mixture(lib, weights, 0.01, 0.8, rng.next());
    inst.label = Label::Outlier;
    inst.provenance = Provenance::Unexpected;
    d.instances.push_back(std::move(inst));
  }
  return d;
}

}  // namespace oscls
