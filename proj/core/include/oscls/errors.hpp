#pragma once

#include <stdexcept>
#include <string>

namespace oscls {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files (CSV layout, labels, numeric fields).
struct FormatError : Error {
  using Error::Error;
};

// Invalid argument values passed to an operation.
struct ArgumentError : Error {
  using Error::Error;
};

// Dimension mismatches between spectra / models.
struct ShapeError : Error {
  using Error::Error;
};

// Degenerate inputs to a distance metric (zero vector under cosine).
struct DistanceError : Error {
  using Error::Error;
};

// A split that cannot satisfy the stratification contract.
struct SplitError : Error {
  using Error::Error;
};

// Fit preconditions not met (too few targets, single-class data, ...).
struct TrainingError : Error {
  using Error::Error;
};

// Corrupt, truncated or unrecognized model files.
struct PersistenceError : Error {
  using Error::Error;
};

}  // namespace oscls
