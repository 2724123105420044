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

#include "sqstat/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sqstat {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace

double normalize_phase(double angle) {
  require_finite(angle, "phase");
  double t = std::fmod(angle, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  // -tiny + 2*pi can round up to exactly 2*pi.
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double circular_distance(double a, double b) {
  const double d = std::abs(normalize_phase(a) - normalize_phase(b));
  return std::min(d, kTwoPi - d);
}

SqueezeParameter::SqueezeParameter(double r, double phi) {
  require_finite(r, "squeeze magnitude r");
  if (r < 0.0) {
    throw DomainError("squeeze magnitude r must be >= 0, got " +
                      std::to_string(r));
  }
  r_ = r;
  phi_ = normalize_phase(phi);
}

SqueezeParameter SqueezeParameter::negated() const {
  return SqueezeParameter(r_, phi_ + std::numbers::pi);
}

CoherentAmplitude::CoherentAmplitude(double magnitude, double theta) {
  require_finite(magnitude, "coherent amplitude |alpha|");
  if (magnitude < 0.0) {
    throw DomainError("coherent amplitude |alpha| must be >= 0, got " +
                      std::to_string(magnitude));
  }
  mag_ = magnitude;
  theta_ = normalize_phase(theta);
}

CoherentAmplitude CoherentAmplitude::from_complex(ComplexValue alpha) {
  const double mag = std::abs(alpha);
  return CoherentAmplitude(mag, mag == 0.0 ? 0.0 : std::arg(alpha));
}

DimensionlessTemperature::DimensionlessTemperature(double x) : x_(x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("dimensionless temperature x = hbar*omega/(k_B*T) "
                      "must be finite and > 0, got " + std::to_string(x));
  }
}

DimensionlessTemperature DimensionlessTemperature::from_physical(
    double temperature_kelvin, double omega_rad_per_s) {
  if (!std::isfinite(temperature_kelvin) || temperature_kelvin <= 0.0) {
    throw DomainError("temperature must be finite and > 0 K");
  }
  if (!std::isfinite(omega_rad_per_s) || omega_rad_per_s <= 0.0) {
    throw DomainError("angular frequency must be finite and > 0 rad/s");
  }
  return DimensionlessTemperature(constants::kHbar * omega_rad_per_s /
                                  (constants::kBoltzmann * temperature_kelvin));
}

double DimensionlessTemperature::temperature_kelvin(
    double omega_rad_per_s) const {
  return constants::kHbar * omega_rad_per_s / (constants::kBoltzmann * x_);
}

double thermal_mean(DimensionlessTemperature x) {
  if (x.value() > kVacuumThreshold) return 0.0;
  return 1.0 / std::expm1(x.value());
}

double thermal_variance(DimensionlessTemperature x) {
  const double n = thermal_mean(x);
  return n * (n + 1.0);
}

BogoliubovCoefficients coefficients_from_squeeze(const SqueezeParameter& z) {
  return {ComplexValue(std::cosh(z.r()), 0.0),
          z.phase_factor() * std::sinh(z.r())};
}

}  // namespace sqstat
