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

#ifndef SQSTAT_TOOLS_CLI_SWEEP_HPP_
#define SQSTAT_TOOLS_CLI_SWEEP_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sqstat/closed_form.hpp"

namespace sqstat::cli {

enum class SweepParameter { kR, kPhi, kAlphaMag, kAlphaPhase, kX };

const char* to_string(SweepParameter parameter);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);

struct SweepSpec {
  SweepParameter parameter;
  double start;
  double stop;
  std::size_t steps;
  /// Values of the parameters that are not swept.
  ModeParameters fixed;
};

/// Throws DomainError unless start < stop, both finite, and steps >= 2.
void validate(const SweepSpec& spec);

/// steps values from start to stop inclusive, linearly spaced, ascending.
/// The last value is exactly stop.
std::vector<double> swept_values(const SweepSpec& spec);

/// Copy of p with one parameter replaced; re-validates through the
/// parameter types, so e.g. a negative r throws DomainError.
ModeParameters with_parameter(const ModeParameters& p,
                              SweepParameter parameter, double value);

}  // namespace sqstat::cli

#endif  // SQSTAT_TOOLS_CLI_SWEEP_HPP_
