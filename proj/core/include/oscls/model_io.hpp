#pragma once

#include <string>
#include <variant>

#include "oscls/knn2.hpp"
#include "oscls/oknn.hpp"
#include "oscls/svm.hpp"

namespace oscls {

using AnyModel = std::variant<OkNNModel, Knn2Model, SvmModel>;

/// Self-describing JSON document: `kind` tag, format version, parameters
/// and the full numeric payload at round-trip-safe precision.
void save_model(const AnyModel& model, const std::string& path);

/// Throws PersistenceError on unreadable, truncated, corrupted or
/// unknown-kind files.
AnyModel load_model(const std::string& path);

}  // namespace oscls
