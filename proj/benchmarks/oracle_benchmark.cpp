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

#include <vector>

#include <benchmark/benchmark.h>

#include "sqstat/closed_form.hpp"
#include "sqstat/fock_oracle.hpp"
#include "sqstat/spectral.hpp"
#include "structured_expm.hpp"

namespace {

using namespace sqstat;

const ModeParameters kPoint{SqueezeParameter(0.8, 1.2), CoherentAmplitude(1.5, 1.0),
                            DimensionlessTemperature(0.5)};

void BM_ClosedForm(benchmark::State& state) {
  const auto which = static_cast<StateOrdering>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_statistics(kPoint, which));
  }
}
BENCHMARK(BM_ClosedForm)->Arg(0)->Arg(1);

void BM_SpectralReconstruction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_representation(
        spectral_for(kPoint, StateOrdering::kSqueezedInPhotonThermal), kPoint.x));
  }
}
BENCHMARK(BM_SpectralReconstruction);

void BM_TridiagonalExpm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> superdiag(n - 1);
  for (std::size_t m = 0; m + 1 < n; ++m) superdiag[m] = 0.1 * double(m + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detail::expm_antisymmetric_tridiagonal(superdiag));
  }
}
BENCHMARK(BM_TridiagonalExpm)->RangeMultiplier(2)->Range(32, 512)
    ->Unit(benchmark::kMicrosecond);

void BM_OracleAtDim(benchmark::State& state) {
  const FockSpaceRef fs = build_fock_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle_statistics(fs, kPoint, StateOrdering::kPhotonsInSqueezedThermal));
  }
}
BENCHMARK(BM_OracleAtDim)->RangeMultiplier(2)->Range(32, 256)
    ->Unit(benchmark::kMillisecond);

void BM_ConvergeStatistics(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(converge_statistics(
        kPoint, StateOrdering::kSqueezedInPhotonThermal, 1e-6));
  }
}
BENCHMARK(BM_ConvergeStatistics)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
