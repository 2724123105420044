// Copyright 2026 The sqstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <variant>

namespace sqstat::cli {

std::string format_number(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
  return buf;
}

double round_for_output(double value) {
  if (!std::isfinite(value)) return value;
  return std::stod(format_number(value, kMachineDigits));
}

nlohmann::json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return round_for_output(value);
}

nlohmann::json to_json(const ModeParameters& p) {
  return {
      {"r", json_number(p.squeeze.r())},
      {"phi", json_number(p.squeeze.phi())},
      {"alpha_mag", json_number(p.coherent.magnitude())},
      {"alpha_phase", json_number(p.coherent.theta())},
      {"x", json_number(p.x.value())},
  };
}

nlohmann::json to_json(const SpectralAtom& atom) {
  nlohmann::json temp;
  if (const auto* finite = std::get_if<FiniteTemperature>(&atom.temperature)) {
    temp = json_number(finite->ratio);
  } else {
    temp = "infinite";
  }
  return {{"weight", json_number(atom.weight)},
          {"temp", temp},
          {"mu", json_number(atom.mu)}};
}

nlohmann::json to_json(const SpectralFunction& sf) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const SpectralAtom& atom : sf.atoms()) atoms.push_back(to_json(atom));
  return atoms;
}

nlohmann::json to_json(const TruncationReport& report) {
  nlohmann::json values = nlohmann::json::array();
  for (double v : report.values) values.push_back(json_number(v));
  nlohmann::json variances = nlohmann::json::array();
  for (double v : report.variances) variances.push_back(json_number(v));
  nlohmann::json changes = nlohmann::json::array();
  for (double v : report.rel_changes) changes.push_back(json_number(v));
  return {
      {"dims_tried", report.dims_tried},
      {"values", values},
      {"variances", variances},
      {"rel_changes", changes},
      {"converged", report.converged},
      {"final_rel_change", json_number(report.final_rel_change)},
  };
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::string render_csv(const CsvRow& header, const std::vector<CsvRow>& rows) {
  std::string out;
  auto append = [&out](const CsvRow& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  append(header);
  for (const CsvRow& row : rows) append(row);
  return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    CsvRow row;
    std::size_t field_start = 0;
    while (true) {
      const std::size_t comma = line.find(',', field_start);
      row.emplace_back(line.substr(field_start, comma - field_start));
      if (comma == std::string_view::npos) break;
      field_start = comma + 1;
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  return rows;
}

std::string render_table(const CsvRow& header,
                         const std::vector<CsvRow>& rows) {
  std::vector<std::size_t> widths(header.size(), 0);
  auto widen = [&widths](const CsvRow& row) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  };
  widen(header);
  for (const CsvRow& row : rows) widen(row);

  std::ostringstream out;
  auto emit = [&](const CsvRow& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size() && i < widths.size()) {
        line.append(widths[i] - row[i].size(), ' ');
      }
    }
    out << line << '\n';
  };
  emit(header);
  for (const CsvRow& row : rows) emit(row);
  return out.str();
}

}  // namespace sqstat::cli
