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

#ifndef SQSTAT_CLOSED_FORM_HPP_
#define SQSTAT_CLOSED_FORM_HPP_

#include <string>
#include <vector>

#include "sqstat/core_types.hpp"

namespace sqstat {

/// The squeeze, coherent amplitude and temperature of a single mode.
struct ModeParameters {
  SqueezeParameter squeeze;
  CoherentAmplitude coherent;
  DimensionlessTemperature x;

  friend bool operator==(const ModeParameters&,
                         const ModeParameters&) = default;
};

/// Which mode is thermalised and which number operator is measured.
enum class StateOrdering {
  /// Thermal state of the B mode, photon number a^dagger a measured.
  kPhotonsInSqueezedThermal,
  /// Thermal state of photons, B^dagger B measured.
  kSqueezedInPhotonThermal,
};

const char* to_string(StateOrdering which);

struct NumberStatistics {
  double mean = 0.0;
  double variance = 0.0;
  /// Non-fatal precision notes (e.g. very large squeezing).
  std::vector<std::string> warnings;
};

/// Above this r, cosh(4r) > 1e17 and double precision is visibly degraded.
inline constexpr double kLargeSqueezeWarning = 10.0;

/// alpha*cosh(r) - alpha^* e^{i phi} sinh(r), the coherent amplitude seen by
/// the photon mode when the squeezed coherent mode is thermalised.
ComplexValue effective_amplitude(const ModeParameters& p);

/// <a^dagger a> in the thermal state of squeezed coherent photons:
/// cosh(2r) n + sinh^2(r) + |effective_amplitude|^2.
double mean_photons_in_squeezed_thermal(const ModeParameters& p);

/// Number variance of photons in the thermal state of squeezed coherent
/// photons. The coherent term uses alpha*cosh(2r) - alpha^* e^{i phi}
/// sinh(2r): the effective amplitude pushed through the Bogoliubov mix a
/// second time.
double variance_photons_in_squeezed_thermal(const ModeParameters& p);

/// <B^dagger B> in the thermal state of photons:
/// cosh(2r) n + sinh^2(r) + |alpha|^2. Independent of both phases.
double mean_squeezed_in_photon_thermal(const ModeParameters& p);

/// Number variance of squeezed coherent photons in the thermal state of
/// photons; coherent term |alpha cosh(r) + alpha^* e^{i phi} sinh(r)|^2.
double variance_squeezed_in_photon_thermal(const ModeParameters& p);

/// alpha -> effective_amplitude(p), zeta -> -zeta, x unchanged. Maps the
/// photon-thermal statistics onto the squeezed-thermal ones and is its own
/// inverse.
ModeParameters transform_parameters(const ModeParameters& p);

/// Mean and variance for the requested ordering, with a warning attached
/// when r exceeds kLargeSqueezeWarning.
NumberStatistics closed_form_statistics(const ModeParameters& p,
                                        StateOrdering which);

}  // namespace sqstat

#endif  // SQSTAT_CLOSED_FORM_HPP_
