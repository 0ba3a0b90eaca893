#pragma once

#include <string>

#include "oscls/dataset.hpp"

namespace oscls {

enum class Metric { Cosine, Euclidean };

std::string to_string(Metric metric);
Metric parse_metric(const std::string& token);

/// 1 - a.b / (|a||b|), in [0, 2]. Throws DistanceError on a zero vector.
double cosine_distance(const Spectrum& a, const Spectrum& b);

/// sqrt(sum (a_i - b_i)^2). Throws ShapeError on length mismatch.
double euclidean_distance(const Spectrum& a, const Spectrum& b);

/// Metric dispatch as used by the classifiers: a zero vector under cosine
/// is treated as maximally distant (2) instead of raising.
double metric_distance(Metric metric, const Spectrum& a, const Spectrum& b);

}  // namespace oscls
