#pragma once

#include <string>

#include "oscls/dataset.hpp"

namespace oscls {

/// Reads a dataset from CSV with header
/// `ch_0,...,ch_{n-1},label[,provenance][,materials]`.
/// Labels are parsed case-insensitively from {target, outlier}; provenance
/// defaults to expected; materials are semicolon-separated within one field.
Dataset load_csv(const std::string& path);

/// Writes the same schema; intensities at 17 significant digits so that
/// load_csv(write_csv(d)) reproduces d exactly.
void write_csv(const Dataset& d, const std::string& path);

}  // namespace oscls
