#include "oscls/split.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>

#include "oscls/errors.hpp"
#include "oscls/rng.hpp"

namespace oscls {

Dataset relabel(const Dataset& d, const std::set<std::string>& target_materials) {
  if (target_materials.empty()) {
    throw ArgumentError("relabel: target material set is empty");
  }
  for (const auto& name : target_materials) {
    if (name.empty()) {
      throw ArgumentError("relabel: empty material name");
    }
  }
  Dataset out = d;
  for (auto& inst : out.instances) {
    const bool is_target =
        std::any_of(inst.materials.begin(), inst.materials.end(),
                    [&](const std::string& m) { return target_materials.count(m) > 0; });
    inst.label = is_target ? Label::Target : Label::Outlier;
  }
  return out;
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& d,
                                             double train_fraction,
                                             std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ArgumentError("stratified_split: train_fraction must lie in (0, 1)");
  }

  std::vector<std::size_t> target_idx;
  std::vector<std::size_t> outlier_idx;
  for (std::size_t i = 0; i < d.instances.size(); ++i) {
    (d.instances[i].label == Label::Target ? target_idx : outlier_idx).push_back(i);
  }
  if (target_idx.size() < 2 || outlier_idx.size() < 2) {
    throw SplitError("stratified_split: each class needs at least 2 instances (got " +
                     std::to_string(target_idx.size()) + " targets, " +
                     std::to_string(outlier_idx.size()) + " outliers)");
  }

  SeededRng rng(seed);
  rng.shuffle(target_idx);
  rng.shuffle(outlier_idx);

  Dataset train;
  Dataset test;
  train.channel_count = test.channel_count = d.channel_count;

  const auto deal = [&](const std::vector<std::size_t>& idx) {
    // round half up of class_count * fraction
    auto n_train = static_cast<std::size_t>(
        std::floor(static_cast<double>(idx.size()) * train_fraction + 0.5));
    n_train = std::min(std::max<std::size_t>(n_train, 1), idx.size() - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      (i < n_train ? train : test).instances.push_back(d.instances[idx[i]]);
    }
  };
  deal(target_idx);
  deal(outlier_idx);
  return {std::move(train), std::move(test)};
}

Dataset augment_with_unexpected(const Dataset& test, const Dataset& unexpected) {
  if (!unexpected.instances.empty() && test.channel_count != unexpected.channel_count) {
    throw ShapeError("augment_with_unexpected: channel count mismatch (" +
                     std::to_string(test.channel_count) + " vs " +
                     std::to_string(unexpected.channel_count) + ")");
  }
  for (const auto& inst : unexpected.instances) {
    if (inst.provenance != Provenance::Unexpected) {
      throw ArgumentError("augment_with_unexpected: instance lacks Unexpected provenance");
    }
    if (inst.label != Label::Outlier) {
      throw ArgumentError("augment_with_unexpected: unexpected instance labeled Target");
    }
  }
  Dataset out = test;
  out.instances.insert(out.instances.end(), unexpected.instances.begin(),
                       unexpected.instances.end());
  return out;
}

std::string dataset_hash(const Dataset& d) {
  std::uint64_t h = 14695981039346656037ULL;
  const auto mix = [&h](const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
  };
  for (const auto& inst : d.instances) {
    mix(inst.spectrum.data(), inst.spectrum.size() * sizeof(double));
    const unsigned char tag[2] = {
        static_cast<unsigned char>(inst.label == Label::Target ? 1 : 0),
        static_cast<unsigned char>(inst.provenance == Provenance::Unexpected ? 1 : 0)};
    mix(tag, 2);
  }
  std::ostringstream ss;
  ss << std::hex << h;
  return ss.str();
}

}  // namespace oscls
