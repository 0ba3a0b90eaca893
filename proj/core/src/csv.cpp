#include "oscls/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "oscls/errors.hpp"

namespace oscls {

namespace {

std::vector<std::string> split_fields(const std::string& line, char delim) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delim)) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == delim) {
    fields.emplace_back();
  }
  return fields;
}

double parse_intensity(const std::string& text, std::size_t row, std::size_t col) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("row " + std::to_string(row) + ", column " +
                      std::to_string(col) + ": non-numeric intensity '" + text + "'");
  }
  if (!std::isfinite(value)) {
    throw FormatError("row " + std::to_string(row) + ", column " +
                      std::to_string(col) + ": non-finite intensity");
  }
  return value;
}

std::vector<std::string> split_materials(const std::string& field) {
  std::vector<std::string> names;
  for (const auto& name : split_fields(field, ';')) {
    if (!name.empty()) names.push_back(name);
  }
  return names;
}

}  // namespace

Dataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open file: " + path);
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("empty file: " + path);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split_fields(line, ',');
  std::size_t channel_count = 0;
  while (channel_count < header.size() &&
         header[channel_count].rfind("ch_", 0) == 0) {
    ++channel_count;
  }
  if (channel_count < 2) {
    throw FormatError("header must start with at least two ch_* columns");
  }
  std::size_t col = channel_count;
  if (col >= header.size() || header[col] != "label") {
    throw FormatError("header missing 'label' column after channels");
  }
  ++col;
  std::ptrdiff_t provenance_col = -1;
  std::ptrdiff_t materials_col = -1;
  if (col < header.size() && header[col] == "provenance") {
    provenance_col = static_cast<std::ptrdiff_t>(col++);
  }
  if (col < header.size() && header[col] == "materials") {
    materials_col = static_cast<std::ptrdiff_t>(col++);
  }
  if (col != header.size()) {
    throw FormatError("unexpected header column: '" + header[col] + "'");
  }

  Dataset d;
  d.channel_count = channel_count;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line, ',');
    if (fields.size() != header.size()) {
      throw FormatError("row " + std::to_string(row) + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    LabeledInstance inst;
    inst.spectrum.reserve(channel_count);
    for (std::size_t c = 0; c < channel_count; ++c) {
      inst.spectrum.push_back(parse_intensity(fields[c], row, c));
    }
    inst.label = parse_label(fields[channel_count]);
    if (provenance_col >= 0) {
      inst.provenance = parse_provenance(fields[provenance_col]);
    }
    if (materials_col >= 0) {
      inst.materials = split_materials(fields[materials_col]);
    }
    d.instances.push_back(std::move(inst));
  }
  return d;
}

void write_csv(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw FormatError("cannot open file for writing: " + path);
  }
  for (std::size_t c = 0; c < d.channel_count; ++c) {
    out << "ch_" << c << ',';
  }
  out << "label,provenance,materials\n";

  char buf[64];
  for (const auto& inst : d.instances) {
    for (double v : inst.spectrum) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out << buf << ',';
    }
    out << to_string(inst.label) << ',' << to_string(inst.provenance) << ',';
    for (std::size_t i = 0; i < inst.materials.size(); ++i) {
      if (i) out << ';';
      out << inst.materials[i];
    }
    out << '\n';
  }
  if (!out) {
    throw FormatError("write failed: " + path);
  }
}

}  // namespace oscls
