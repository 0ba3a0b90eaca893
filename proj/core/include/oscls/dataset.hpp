#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace oscls {

/// One intensity value per wavenumber channel.
using Spectrum = std::vector<double>;

enum class Label { Target, Outlier };
enum class Provenance { Expected, Unexpected };

std::string to_string(Label label);
std::string to_string(Provenance provenance);
Label parse_label(const std::string& token);
Provenance parse_provenance(const std::string& token);

struct LabeledInstance {
  Spectrum spectrum;
  Label label = Label::Outlier;
  Provenance provenance = Provenance::Expected;
  std::vector<std::string> materials;
};

struct Dataset {
  std::vector<LabeledInstance> instances;
  std::size_t channel_count = 0;

  std::size_t size() const { return instances.size(); }
  std::size_t target_count() const;
  std::size_t outlier_count() const;
};

/// Rescales the spectrum into [0, 1]: (v - min) / (max - min).
/// A constant spectrum maps to all zeros.
Spectrum normalize_instance(const Spectrum& s);

/// normalize_instance applied to every instance.
Dataset normalize_dataset(const Dataset& d);

}  // namespace oscls
