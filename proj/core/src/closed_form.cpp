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

#include "sqstat/closed_form.hpp"

#include <cmath>
#include <complex>

namespace sqstat {

namespace {

// cosh(4r) n^2 + [cosh(4r) + 2|c|^2] n + sinh^2(2r)/2 + |c|^2, shared by
// both orderings; only the coherent amplitude c differs.
double variance_with_coherent_term(double r, double nbar, double coherent2) {
  const double c4 = std::cosh(4.0 * r);
  const double s2 = std::sinh(2.0 * r);
  return c4 * nbar * nbar + (c4 + 2.0 * coherent2) * nbar + 0.5 * s2 * s2 +
         coherent2;
}

double mean_with_coherent_term(double r, double nbar, double coherent2) {
  const double s = std::sinh(r);
  return std::cosh(2.0 * r) * nbar + s * s + coherent2;
}

}  // namespace

const char* to_string(StateOrdering which) {
  switch (which) {
    case StateOrdering::kPhotonsInSqueezedThermal:
      return "photons-in-squeezed-thermal";
    case StateOrdering::kSqueezedInPhotonThermal:
      return "squeezed-in-thermal";
  }
  return "unknown";
}

ComplexValue effective_amplitude(const ModeParameters& p) {
  const ComplexValue alpha = p.coherent.value();
  const double r = p.squeeze.r();
  return alpha * std::cosh(r) -
         std::conj(alpha) * p.squeeze.phase_factor() * std::sinh(r);
}

double mean_photons_in_squeezed_thermal(const ModeParameters& p) {
  return mean_with_coherent_term(p.squeeze.r(), thermal_mean(p.x),
                                 std::norm(effective_amplitude(p)));
}

double variance_photons_in_squeezed_thermal(const ModeParameters& p) {
  const ComplexValue alpha = p.coherent.value();
  const double r = p.squeeze.r();
  const ComplexValue c = alpha * std::cosh(2.0 * r) -
                         std::conj(alpha) * p.squeeze.phase_factor() *
                             std::sinh(2.0 * r);
  return variance_with_coherent_term(r, thermal_mean(p.x), std::norm(c));
}

double mean_squeezed_in_photon_thermal(const ModeParameters& p) {
  const double m = p.coherent.magnitude();
  return mean_with_coherent_term(p.squeeze.r(), thermal_mean(p.x), m * m);
}

double variance_squeezed_in_photon_thermal(const ModeParameters& p) {
  const ComplexValue alpha = p.coherent.value();
  const double r = p.squeeze.r();
  const ComplexValue c = alpha * std::cosh(r) +
                         std::conj(alpha) * p.squeeze.phase_factor() *
                             std::sinh(r);
  return variance_with_coherent_term(r, thermal_mean(p.x), std::norm(c));
}

ModeParameters transform_parameters(const ModeParameters& p) {
  return {p.squeeze.negated(),
          CoherentAmplitude::from_complex(effective_amplitude(p)), p.x};
}

NumberStatistics closed_form_statistics(const ModeParameters& p,
                                        StateOrdering which) {
  NumberStatistics out;
  if (which == StateOrdering::kPhotonsInSqueezedThermal) {
    out.mean = mean_photons_in_squeezed_thermal(p);
    out.variance = variance_photons_in_squeezed_thermal(p);
  } else {
    out.mean = mean_squeezed_in_photon_thermal(p);
    out.variance = variance_squeezed_in_photon_thermal(p);
  }
  if (p.squeeze.r() > kLargeSqueezeWarning) {
    out.warnings.emplace_back(
        "r > 10: cosh(4r) exceeds 1e17, results carry reduced relative "
        "precision");
  }
  return out;
}

}  // namespace sqstat
