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

#ifndef SQSTAT_SRC_STRUCTURED_EXPM_HPP_
#define SQSTAT_SRC_STRUCTURED_EXPM_HPP_

#include <span>

#include <Eigen/Dense>

namespace sqstat::detail {

/// exp(T) for the real antisymmetric tridiagonal T with T(k, k+1) =
/// superdiag[k] and T(k+1, k) = -superdiag[k].
///
/// With L = diag(i^k), L^dagger T L = iJ where J is real symmetric
/// tridiagonal with the same off-diagonal, so
///   exp(T) = L V diag(e^{i lambda}) V^T L^dagger
/// from the eigenpairs (lambda, V) of J. The result is unitary to rounding.
Eigen::MatrixXcd expm_antisymmetric_tridiagonal(
    std::span<const double> superdiag);

}  // namespace sqstat::detail

#endif  // SQSTAT_SRC_STRUCTURED_EXPM_HPP_
