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

#ifndef SQSTAT_TOOLS_CLI_FORMAT_HPP_
#define SQSTAT_TOOLS_CLI_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sqstat/closed_form.hpp"
#include "sqstat/fock_oracle.hpp"
#include "sqstat/spectral.hpp"

namespace sqstat::cli {

enum class OutputFormat { kTable, kCsv, kJson };

/// Significant digits for machine-readable output (CSV, JSON).
inline constexpr int kMachineDigits = 12;
/// Significant digits for human tables.
inline constexpr int kTableDigits = 6;

/// printf("%.*g"); "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double value, int significant_digits);

/// value rounded to kMachineDigits significant digits, for JSON emission.
double round_for_output(double value);

/// JSON number rounded to kMachineDigits, or null when not finite.
nlohmann::json json_number(double value);

nlohmann::json to_json(const ModeParameters& p);
nlohmann::json to_json(const SpectralAtom& atom);
nlohmann::json to_json(const SpectralFunction& sf);
nlohmann::json to_json(const TruncationReport& report);

/// JSON text with a trailing newline.
std::string dump_json(const nlohmann::json& doc);

using CsvRow = std::vector<std::string>;

/// Comma-joined lines, LF endings. Fields never contain commas or quotes.
std::string render_csv(const CsvRow& header, const std::vector<CsvRow>& rows);

/// Splits CSV text produced by render_csv back into rows (header included).
std::vector<CsvRow> parse_csv(std::string_view text);

/// Left-aligned columns separated by two spaces.
std::string render_table(const CsvRow& header, const std::vector<CsvRow>& rows);

}  // namespace sqstat::cli

#endif  // SQSTAT_TOOLS_CLI_FORMAT_HPP_
