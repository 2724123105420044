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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support/reference_values.hpp"

namespace sqstat {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(NormalizePhase, MapsIntoHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(normalize_phase(0.0), 0.0);
  EXPECT_DOUBLE_EQ(normalize_phase(kTwoPi), 0.0);
  EXPECT_NEAR(normalize_phase(-kPi / 2), 1.5 * kPi, 1e-15);
  EXPECT_NEAR(normalize_phase(5 * kPi), kPi, 1e-14);
  // -tiny must not round up to 2*pi.
  const double t = normalize_phase(-1e-300);
  EXPECT_GE(t, 0.0);
  EXPECT_LT(t, kTwoPi);
}

TEST(NormalizePhase, IdempotentBitExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double once = normalize_phase(angle(rng));
    EXPECT_EQ(normalize_phase(once), once);
  }
}

TEST(NormalizePhase, RejectsNonFinite) {
  EXPECT_THROW(normalize_phase(std::numeric_limits<double>::quiet_NaN()),
               DomainError);
  EXPECT_THROW(normalize_phase(std::numeric_limits<double>::infinity()),
               DomainError);
}

TEST(CircularDistance, WrapsAtSeam) {
  EXPECT_NEAR(circular_distance(0.01, kTwoPi - 0.01), 0.02, 1e-12);
  EXPECT_NEAR(circular_distance(0.0, kPi), kPi, 1e-15);
}

TEST(SqueezeParameter, ValidatesAndNormalizes) {
  const SqueezeParameter z(0.5, -kPi);
  EXPECT_EQ(z.r(), 0.5);
  EXPECT_NEAR(z.phi(), kPi, 1e-15);
  EXPECT_THROW(SqueezeParameter(-0.1, 0.0), DomainError);
  EXPECT_THROW(SqueezeParameter(std::nan(""), 0.0), DomainError);
}

TEST(SqueezeParameter, NegationShiftsPhaseByPi) {
  const SqueezeParameter z(0.7, 1.9 * kPi);
  const SqueezeParameter neg = z.negated();
  EXPECT_EQ(neg.r(), z.r());
  EXPECT_NEAR(circular_distance(neg.phi(), z.phi() + kPi), 0.0, 1e-14);
  EXPECT_LT(neg.phi(), kTwoPi);
  const ComplexValue sum = z.value() + neg.value();
  EXPECT_LT(std::abs(sum), 1e-15);
}

TEST(CoherentAmplitude, RectangularRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> comp(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const ComplexValue alpha(comp(rng), comp(rng));
    const CoherentAmplitude a = CoherentAmplitude::from_complex(alpha);
    EXPECT_GE(a.theta(), 0.0);
    EXPECT_LT(a.theta(), kTwoPi);
    EXPECT_LT(std::abs(a.value() - alpha), 1e-12);
  }
  EXPECT_EQ(CoherentAmplitude::from_complex({0.0, 0.0}).theta(), 0.0);
  EXPECT_THROW(CoherentAmplitude(-1.0, 0.0), DomainError);
}

TEST(ComplexValue, ModulusAndArgumentConsistent) {
  const ComplexValue c(-3.0, 4.0);
  EXPECT_NEAR(std::abs(c), 5.0, 1e-12);
  EXPECT_NEAR(std::polar(std::abs(c), std::arg(c)).real(), -3.0, 1e-12);
  EXPECT_NEAR(std::polar(std::abs(c), std::arg(c)).imag(), 4.0, 1e-12);
}

TEST(DimensionlessTemperature, RejectsNonPositive) {
  EXPECT_THROW(DimensionlessTemperature(0.0), DomainError);
  EXPECT_THROW(DimensionlessTemperature(-1.0), DomainError);
  EXPECT_THROW(DimensionlessTemperature(std::numeric_limits<double>::infinity()),
               DomainError);
  EXPECT_THROW(DimensionlessTemperature(std::nan("")), DomainError);
}

TEST(DimensionlessTemperature, PhysicalRoundTrip) {
  for (double t : {0.01, 2.725, 300.0, 1e4}) {
    for (double w : {1e9, 3e13, 2e15}) {
      const auto x = DimensionlessTemperature::from_physical(t, w);
      EXPECT_NEAR(x.temperature_kelvin(w) / t, 1.0, 1e-12);
    }
  }
  // 300 K, omega such that hbar*omega = k_B*T.
  const double w = constants::kBoltzmann * 300.0 / constants::kHbar;
  EXPECT_NEAR(DimensionlessTemperature::from_physical(300.0, w).value(), 1.0,
              1e-14);
  EXPECT_THROW(DimensionlessTemperature::from_physical(0.0, 1e13), DomainError);
  EXPECT_THROW(DimensionlessTemperature::from_physical(300.0, -1.0),
               DomainError);
}

TEST(ThermalMean, KnownValues) {
  EXPECT_NEAR(thermal_mean(DimensionlessTemperature(std::log(2.0))), 1.0,
              1e-15);
  EXPECT_NEAR(thermal_mean(DimensionlessTemperature(1.0)),
              reference::kThermalMeanX1, 1e-15);
  EXPECT_LT(thermal_mean(DimensionlessTemperature(700.0)), 1e-300);
  EXPECT_EQ(thermal_mean(DimensionlessTemperature(701.0)), 0.0);
  EXPECT_EQ(thermal_mean(DimensionlessTemperature(1e6)), 0.0);
}

TEST(ThermalMean, StrictlyDecreasingAndLimits) {
  double previous = thermal_mean(DimensionlessTemperature(1e-6));
  EXPECT_GT(previous, 1e5);
  for (double x = 0.01; x < 50.0; x *= 1.3) {
    const double current = thermal_mean(DimensionlessTemperature(x));
    EXPECT_LT(current, previous);
    previous = current;
  }
}

TEST(ThermalVariance, KnownValuesAndSuperPoissonian) {
  EXPECT_NEAR(thermal_variance(DimensionlessTemperature(std::log(2.0))), 2.0,
              1e-14);
  EXPECT_NEAR(thermal_variance(DimensionlessTemperature(1.0)),
              reference::kThermalVarianceX1, 1e-15);
  EXPECT_EQ(thermal_variance(DimensionlessTemperature(800.0)), 0.0);
  for (double x : {0.05, 0.5, 1.0, 4.0, 30.0}) {
    const DimensionlessTemperature t(x);
    const double n = thermal_mean(t);
    const double v = thermal_variance(t);
    EXPECT_GE(v, n);
    EXPECT_NEAR(v / (n * (n + 1.0)), 1.0, 1e-14);
  }
}

TEST(CoefficientsFromSqueeze, KnownValues) {
  const auto identity = coefficients_from_squeeze(SqueezeParameter(0.0, 2.0));
  EXPECT_EQ(identity.beta, ComplexValue(1.0, 0.0));
  EXPECT_EQ(std::abs(identity.gamma), 0.0);

  const auto c = coefficients_from_squeeze(SqueezeParameter(1.0, 0.0));
  EXPECT_NEAR(c.beta.real(), reference::kCosh1, 1e-15);
  EXPECT_NEAR(c.gamma.real(), reference::kSinh1, 1e-15);
  EXPECT_NEAR(c.gamma.imag(), 0.0, 1e-15);
}

TEST(CoefficientsFromSqueeze, CanonicalConstraintHolds) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> r(0.0, 3.0);
  std::uniform_real_distribution<double> phi(0.0, kTwoPi);
  for (int i = 0; i < 1000; ++i) {
    const auto c = coefficients_from_squeeze(SqueezeParameter(r(rng), phi(rng)));
    // Absolute: cosh^2 r ~ e^{2r}/4 bounds the rounding for larger r.
    EXPECT_LT(std::abs(c.canonical_defect()), 1e-12);
  }
}

}  // namespace
}  // namespace sqstat
