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

#ifndef SQSTAT_CORE_TYPES_HPP_
#define SQSTAT_CORE_TYPES_HPP_

#include <complex>
#include <numbers>

#include "sqstat/errors.hpp"

namespace sqstat {

using ComplexValue = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any finite angle into [0, 2*pi). Values already in range are
/// returned unchanged, so the map is idempotent bit for bit.
double normalize_phase(double angle);

/// Shortest distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

/// zeta = r * exp(i*phi), r >= 0, phi in [0, 2*pi).
class SqueezeParameter {
 public:
  SqueezeParameter() = default;
  /// Throws DomainError for negative or non-finite r, or non-finite phi.
  SqueezeParameter(double r, double phi);

  double r() const { return r_; }
  double phi() const { return phi_; }
  ComplexValue value() const { return std::polar(r_, phi_); }
  /// e^{i*phi}
  ComplexValue phase_factor() const { return std::polar(1.0, phi_); }

  /// zeta -> -zeta, i.e. (r, phi) -> (r, phi + pi mod 2*pi).
  SqueezeParameter negated() const;

  friend bool operator==(const SqueezeParameter&,
                         const SqueezeParameter&) = default;

 private:
  double r_ = 0.0;
  double phi_ = 0.0;
};

/// alpha = |alpha| * exp(i*theta).
class CoherentAmplitude {
 public:
  CoherentAmplitude() = default;
  CoherentAmplitude(double magnitude, double theta);

  static CoherentAmplitude from_complex(ComplexValue alpha);

  double magnitude() const { return mag_; }
  double theta() const { return theta_; }
  ComplexValue value() const { return std::polar(mag_, theta_); }

  friend bool operator==(const CoherentAmplitude&,
                         const CoherentAmplitude&) = default;

 private:
  double mag_ = 0.0;
  double theta_ = 0.0;
};

struct BogoliubovCoefficients {
  ComplexValue beta;
  ComplexValue gamma;

  /// |beta|^2 - |gamma|^2; equals 1 for a canonical transformation.
  double canonical_defect() const {
    return std::norm(beta) - std::norm(gamma) - 1.0;
  }
};

/// x = hbar*omega / (k_B*T), strictly positive.
class DimensionlessTemperature {
 public:
  /// Throws DomainError unless x is finite and > 0.
  explicit DimensionlessTemperature(double x);

  /// Uses the exact SI values of hbar and k_B.
  static DimensionlessTemperature from_physical(double temperature_kelvin,
                                                double omega_rad_per_s);

  double value() const { return x_; }
  /// Inverse of from_physical for a given angular frequency.
  double temperature_kelvin(double omega_rad_per_s) const;

  friend bool operator==(const DimensionlessTemperature&,
                         const DimensionlessTemperature&) = default;

 private:
  double x_;
};

namespace constants {
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
}  // namespace constants

/// Above this x the thermal occupancy is treated as exactly zero.
inline constexpr double kVacuumThreshold = 700.0;

/// Bose-Einstein occupancy 1/(e^x - 1).
double thermal_mean(DimensionlessTemperature x);
/// n(n + 1) for the thermal occupancy n.
double thermal_variance(DimensionlessTemperature x);

BogoliubovCoefficients coefficients_from_squeeze(const SqueezeParameter& z);

}  // namespace sqstat

#endif  // SQSTAT_CORE_TYPES_HPP_
