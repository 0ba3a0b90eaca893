#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "oscls/dataset.hpp"

namespace oscls {

/// Relabels every instance: Target iff its materials list intersects
/// target_materials. Spectra and instance order are untouched.
Dataset relabel(const Dataset& d, const std::set<std::string>& target_materials);

/// Seeded stratified split. Each class is shuffled independently with the
/// seeded generator; round-half-up of class_count * train_fraction goes to
/// the training side. Deterministic per (d, train_fraction, seed).
std::pair<Dataset, Dataset> stratified_split(const Dataset& d,
                                             double train_fraction,
                                             std::uint64_t seed);

/// Appends the unexpected set to a test set. Every unexpected instance must
/// be an Outlier with provenance Unexpected and match the channel count.
Dataset augment_with_unexpected(const Dataset& test, const Dataset& unexpected);

/// FNV-1a hash over spectra bytes, labels and provenance; used to assert the
/// shared-split contract across algorithms.
std::string dataset_hash(const Dataset& d);

}  // namespace oscls
