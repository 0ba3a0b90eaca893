#include "oscls/dataset.hpp"

#include <algorithm>
#include <cctype>

#include "oscls/errors.hpp"

namespace oscls {

namespace {

std::string lowercase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string to_string(Label label) {
  return label == Label::Target ? "target" : "outlier";
}

std::string to_string(Provenance provenance) {
  return provenance == Provenance::Expected ? "expected" : "unexpected";
}

Label parse_label(const std::string& token) {
  const std::string t = lowercase(token);
  if (t == "target") return Label::Target;
  if (t == "outlier") return Label::Outlier;
  throw FormatError("unknown label token: '" + token + "'");
}

Provenance parse_provenance(const std::string& token) {
  const std::string t = lowercase(token);
  if (t == "expected" || t.empty()) return Provenance::Expected;
  if (t == "unexpected") return Provenance::Unexpected;
  throw FormatError("unknown provenance token: '" + token + "'");
}

std::size_t Dataset::target_count() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(),
                    [](const LabeledInstance& i) { return i.label == Label::Target; }));
}

std::size_t Dataset::outlier_count() const {
  return instances.size() - target_count();
}

Spectrum normalize_instance(const Spectrum& s) {
  if (s.empty()) return s;
  const auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  Spectrum out(s.size());
  if (hi == lo) {
    // constant spectrum carries no shape
    std::fill(out.begin(), out.end(), 0.0);
    return out;
  }
  const double span = hi - lo;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = (s[i] - lo) / span;
  }
  return out;
}

Dataset normalize_dataset(const Dataset& d) {
  Dataset out = d;
  for (auto& inst : out.instances) {
    inst.spectrum = normalize_instance(inst.spectrum);
  }
  return out;
}

}  // namespace oscls
