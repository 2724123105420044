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

#include "cli/sweep.hpp"

#include <cmath>

namespace sqstat::cli {

const char* to_string(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kR: return "r";
    case SweepParameter::kPhi: return "phi";
    case SweepParameter::kAlphaMag: return "alpha_mag";
    case SweepParameter::kAlphaPhase: return "alpha_phase";
    case SweepParameter::kX: return "x";
  }
  return "unknown";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
  for (SweepParameter p :
       {SweepParameter::kR, SweepParameter::kPhi, SweepParameter::kAlphaMag,
        SweepParameter::kAlphaPhase, SweepParameter::kX}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

void validate(const SweepSpec& spec) {
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop)) {
    throw DomainError("sweep bounds must be finite");
  }
  if (!(spec.start < spec.stop)) {
    throw DomainError("sweep requires start < stop");
  }
  if (spec.steps < 2) {
    throw DomainError("sweep requires at least 2 steps");
  }
}

std::vector<double> swept_values(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> values(spec.steps);
  const double span = spec.stop - spec.start;
  const double last = static_cast<double>(spec.steps - 1);
  for (std::size_t i = 0; i < spec.steps; ++i) {
    values[i] = spec.start + span * (static_cast<double>(i) / last);
  }
  values.back() = spec.stop;
  return values;
}

ModeParameters with_parameter(const ModeParameters& p,
                              SweepParameter parameter, double value) {
  ModeParameters out = p;
  switch (parameter) {
    case SweepParameter::kR:
      out.squeeze = SqueezeParameter(value, p.squeeze.phi());
      break;
    case SweepParameter::kPhi:
      out.squeeze = SqueezeParameter(p.squeeze.r(), value);
      break;
    case SweepParameter::kAlphaMag:
      out.coherent = CoherentAmplitude(value, p.coherent.theta());
      break;
    case SweepParameter::kAlphaPhase:
      out.coherent = CoherentAmplitude(p.coherent.magnitude(), value);
      break;
    case SweepParameter::kX:
      out.x = DimensionlessTemperature(value);
      break;
  }
  return out;
}

}  // namespace sqstat::cli
