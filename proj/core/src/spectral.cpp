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

#include "sqstat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sqstat {

namespace {

void validate(const SpectralAtom& atom) {
  if (!std::isfinite(atom.weight) || atom.weight <= 0.0) {
    throw DomainError("spectral atom weight must be finite and > 0");
  }
  if (!std::isfinite(atom.mu) || atom.mu < 0.0) {
    throw DomainError("spectral atom chemical potential must be finite and "
                      ">= 0");
  }
  if (const auto* finite = std::get_if<FiniteTemperature>(&atom.temperature)) {
    if (!std::isfinite(finite->ratio) || finite->ratio <= 0.0) {
      throw DomainError("spectral atom temperature ratio T'/T must be finite "
                        "and > 0");
    }
  } else if (atom.mu == 0.0) {
    throw DivergenceError("infinite-temperature atom with mu = 0 has a "
                          "divergent Bose factor 1/(e^0 - 1)");
  }
}

// 1/(e^mu - 1) = occupancy  <=>  mu = ln(1 + 1/occupancy).
std::optional<double> chemical_potential_for_occupancy(double occupancy) {
  if (occupancy <= 0.0) return std::nullopt;
  return std::log1p(1.0 / occupancy);
}

double non_thermal_occupancy(double r, double coherent2) {
  const double s = std::sinh(r);
  return s * s + coherent2;
}

SpectralFunction two_atom_spectrum(double r, std::optional<double> mu) {
  std::vector<SpectralAtom> atoms;
  atoms.push_back({std::cosh(2.0 * r), FiniteTemperature{1.0}, 0.0});
  if (mu) atoms.push_back({1.0, InfiniteTemperature{}, *mu});
  return SpectralFunction(std::move(atoms));
}

}  // namespace

SpectralFunction::SpectralFunction(std::vector<SpectralAtom> atoms) {
  if (atoms.empty()) {
    throw DomainError("spectral function needs at least one atom");
  }
  for (const SpectralAtom& atom : atoms) {
    validate(atom);
    auto same_support = [&](const SpectralAtom& a) {
      return a.temperature == atom.temperature && a.mu == atom.mu;
    };
    auto it = std::find_if(atoms_.begin(), atoms_.end(), same_support);
    if (it == atoms_.end()) {
      atoms_.push_back(atom);
    } else {
      it->weight += atom.weight;
    }
  }
}

std::optional<double> chemical_potential_photons_in_squeezed_thermal(
    const ModeParameters& p) {
  return chemical_potential_for_occupancy(non_thermal_occupancy(
      p.squeeze.r(), std::norm(effective_amplitude(p))));
}

std::optional<double> chemical_potential_squeezed_in_photon_thermal(
    const ModeParameters& p) {
  const double m = p.coherent.magnitude();
  return chemical_potential_for_occupancy(
      non_thermal_occupancy(p.squeeze.r(), m * m));
}

SpectralFunction spectral_for_photons_in_squeezed_thermal(
    const ModeParameters& p) {
  return two_atom_spectrum(p.squeeze.r(),
                           chemical_potential_photons_in_squeezed_thermal(p));
}

SpectralFunction spectral_for_squeezed_in_photon_thermal(
    const ModeParameters& p) {
  return two_atom_spectrum(p.squeeze.r(),
                           chemical_potential_squeezed_in_photon_thermal(p));
}

SpectralFunction spectral_for(const ModeParameters& p, StateOrdering which) {
  return which == StateOrdering::kPhotonsInSqueezedThermal
             ? spectral_for_photons_in_squeezed_thermal(p)
             : spectral_for_squeezed_in_photon_thermal(p);
}

double evaluate_representation(const SpectralFunction& sf,
                               DimensionlessTemperature x) {
  double total = 0.0;
  for (const SpectralAtom& atom : sf.atoms()) {
    double exponent = atom.mu;
    if (const auto* finite =
            std::get_if<FiniteTemperature>(&atom.temperature)) {
      exponent += x.value() / finite->ratio;
    }
    if (exponent > kVacuumThreshold) continue;
    total += atom.weight / std::expm1(exponent);
  }
  return total;
}

double normalization_integral(const SpectralFunction& sf) {
  double total = 0.0;
  for (const SpectralAtom& atom : sf.atoms()) total += atom.weight;
  return total;
}

double equilibrium_temperature(const SpectralFunction& sf,
                               double bath_temperature) {
  if (!std::isfinite(bath_temperature) || bath_temperature <= 0.0) {
    throw DomainError("bath temperature must be finite and > 0");
  }
  double moment = 0.0;
  bool any_finite = false;
  for (const SpectralAtom& atom : sf.atoms()) {
    if (const auto* finite =
            std::get_if<FiniteTemperature>(&atom.temperature)) {
      moment += atom.weight * finite->ratio * bath_temperature;
      any_finite = true;
    }
  }
  if (!any_finite) {
    throw DomainError("equilibrium temperature needs at least one "
                      "finite-temperature atom");
  }
  return moment;
}

}  // namespace sqstat
