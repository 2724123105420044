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

#include "structured_expm.hpp"

#include <complex>

#include <Eigen/Eigenvalues>

namespace sqstat::detail {

Eigen::MatrixXcd expm_antisymmetric_tridiagonal(
    std::span<const double> superdiag) {
  const Eigen::Index n = static_cast<Eigen::Index>(superdiag.size()) + 1;
  if (n == 1) return Eigen::MatrixXcd::Identity(1, 1);

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (Eigen::Index k = 0; k < n - 1; ++k) sub(k) = superdiag[k];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const Eigen::MatrixXd& v = solver.eigenvectors();
  const Eigen::VectorXd& lambda = solver.eigenvalues();

  const Eigen::MatrixXd re =
      v * lambda.array().cos().matrix().asDiagonal() * v.transpose();
  const Eigen::MatrixXd im =
      v * lambda.array().sin().matrix().asDiagonal() * v.transpose();

  // i^{j-k} depends only on (j - k) mod 4.
  static constexpr std::complex<double> kPowersOfI[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto phase = kPowersOfI[((j - k) % 4 + 4) % 4];
      out(j, k) = phase * std::complex<double>(re(j, k), im(j, k));
    }
  }
  return out;
}

}  // namespace sqstat::detail
