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

#ifndef SQSTAT_SPECTRAL_HPP_
#define SQSTAT_SPECTRAL_HPP_

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sqstat/closed_form.hpp"
#include "sqstat/core_types.hpp"

namespace sqstat {

// Spectral functions sigma(T, T', mu) for the integral representation
//
//   n(omega, T) = int dT' int dmu sigma(T, T', mu) / (e^mu e^{hbar omega/k_B T'} - 1)
//
// are kept as finite sums of weighted delta atoms in (T', mu). Nothing is
// mollified or integrated numerically.

/// T' = ratio * T for a bath at temperature T.
struct FiniteTemperature {
  double ratio = 1.0;
  friend bool operator==(const FiniteTemperature&,
                         const FiniteTemperature&) = default;
};

/// T' = infinity; the Bose factor reduces to 1/(e^mu - 1).
struct InfiniteTemperature {
  friend bool operator==(const InfiniteTemperature&,
                         const InfiniteTemperature&) = default;
};

using AtomTemperature = std::variant<FiniteTemperature, InfiniteTemperature>;

struct SpectralAtom {
  double weight = 0.0;
  AtomTemperature temperature;
  double mu = 0.0;

  bool is_infinite_temperature() const {
    return std::holds_alternative<InfiniteTemperature>(temperature);
  }
  friend bool operator==(const SpectralAtom&, const SpectralAtom&) = default;
};

class SpectralFunction {
 public:
  /// Validates every atom and merges atoms that share (temperature, mu),
  /// keeping first-occurrence order. Throws DomainError for an empty list,
  /// weight <= 0, mu < 0 or a non-positive finite temperature ratio, and
  /// DivergenceError for an infinite-temperature atom with mu == 0.
  explicit SpectralFunction(std::vector<SpectralAtom> atoms);

  std::span<const SpectralAtom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<SpectralAtom> atoms_;
};

/// mu_B = ln((cosh^2 r + |c|^2)/(sinh^2 r + |c|^2)) with c the effective
/// amplitude. Empty when r = 0 and c = 0, where mu_B is infinite.
std::optional<double> chemical_potential_photons_in_squeezed_thermal(
    const ModeParameters& p);

/// mu_a = ln((cosh^2 r + |alpha|^2)/(sinh^2 r + |alpha|^2)); empty when
/// r = 0 and alpha = 0.
std::optional<double> chemical_potential_squeezed_in_photon_thermal(
    const ModeParameters& p);

/// {cosh 2r at T' = T, mu = 0} plus {1 at T' = inf, mu = mu_B}. The second
/// atom is dropped when its occupancy vanishes (r = 0, alpha = 0).
SpectralFunction spectral_for_photons_in_squeezed_thermal(
    const ModeParameters& p);

/// Same shape as above with mu_a in place of mu_B.
SpectralFunction spectral_for_squeezed_in_photon_thermal(
    const ModeParameters& p);

SpectralFunction spectral_for(const ModeParameters& p, StateOrdering which);

/// Exact value of the integral representation against the atoms:
/// sum of weight / (e^{mu} e^{x T/T'} - 1).
double evaluate_representation(const SpectralFunction& sf,
                               DimensionlessTemperature x);

/// Total weight. Equals 1 for a single source and exceeds 1 otherwise.
double normalization_integral(const SpectralFunction& sf);

/// First T'-moment of the finite-temperature atoms, sum of weight * T'.
/// Infinite-temperature atoms are excluded. Throws DomainError if sf has no
/// finite-temperature atom or if bath_temperature is not finite and > 0.
double equilibrium_temperature(const SpectralFunction& sf,
                               double bath_temperature);

}  // namespace sqstat

#endif  // SQSTAT_SPECTRAL_HPP_
