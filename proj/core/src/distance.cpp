#include "oscls/distance.hpp"

#include <algorithm>
#include <cmath>

#include "oscls/errors.hpp"

namespace oscls {

namespace {

void check_lengths(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw ShapeError("distance: length mismatch (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
}

bool is_zero(const Spectrum& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

}  // namespace

std::string to_string(Metric metric) {
  return metric == Metric::Cosine ? "cosine" : "euclidean";
}

Metric parse_metric(const std::string& token) {
  if (token == "cosine") return Metric::Cosine;
  if (token == "euclidean") return Metric::Euclidean;
  throw ArgumentError("unknown metric: '" + token + "'");
}

double cosine_distance(const Spectrum& a, const Spectrum& b) {
  check_lengths(a, b);
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) {
    throw DistanceError("cosine_distance: zero vector");
  }
  const double cosine = std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0);
  return 1.0 - cosine;
}

double euclidean_distance(const Spectrum& a, const Spectrum& b) {
  check_lengths(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double metric_distance(Metric metric, const Spectrum& a, const Spectrum& b) {
  if (metric == Metric::Euclidean) {
    return euclidean_distance(a, b);
  }
  check_lengths(a, b);
  if (is_zero(a) || is_zero(b)) {
    return 2.0;  // flat spectrum shares no shape with anything
  }
  return cosine_distance(a, b);
}

}  // namespace oscls
