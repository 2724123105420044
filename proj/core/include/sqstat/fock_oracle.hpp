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

#ifndef SQSTAT_FOCK_ORACLE_HPP_
#define SQSTAT_FOCK_ORACLE_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sqstat/closed_form.hpp"
#include "sqstat/core_types.hpp"

namespace sqstat {

// Brute-force reference for the closed forms: every operator is a dense
// matrix on the truncated Fock basis {|0>, ..., |N-1>} and every statistic
// is a trace. Nothing here calls into closed_form beyond the shared
// parameter types.

using ComplexMatrix = Eigen::MatrixXcd;

struct OracleConfig {
  /// Largest squeeze magnitude the oracle accepts.
  double r_max = 2.0;
  std::size_t start_dim = 32;
  std::size_t dim_max = 512;
  /// Max-abs tolerance on S^dagger S - I and D^dagger D - I over the leading
  /// block.
  double unitarity_tol = 1e-8;
  /// D(alpha) is refused when |alpha|^2 > fraction * dim.
  double displacement_fill_fraction = 0.25;
  /// The conjugation route for B works in guard_factor * N states and keeps
  /// the leading N x N corner.
  std::size_t conjugation_guard_factor = 4;
};

/// Truncated single-mode Fock space with its ladder matrices.
class FockSpace {
 public:
  /// Throws DomainError for dim < 2.
  explicit FockSpace(std::size_t dim);

  std::size_t dim() const { return dim_; }
  /// Side of the top-left block used for truncation-tolerant checks.
  std::size_t leading_block() const { return dim_ / 2; }

  const ComplexMatrix& annihilate() const { return annihilate_; }
  const ComplexMatrix& create() const { return create_; }
  ComplexMatrix number() const;
  ComplexMatrix identity() const;

 private:
  std::size_t dim_;
  ComplexMatrix annihilate_;
  ComplexMatrix create_;
};

using FockSpaceRef = std::shared_ptr<const FockSpace>;

FockSpaceRef build_fock_space(std::size_t dim);

class ModeOperator {
 public:
  /// Throws std::invalid_argument if the matrix is not dim x dim.
  ModeOperator(FockSpaceRef space, ComplexMatrix matrix);

  const FockSpace& space() const { return *space_; }
  const FockSpaceRef& space_ref() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  ModeOperator adjoint() const;

 private:
  FockSpaceRef space_;
  ComplexMatrix matrix_;
};

class DensityMatrix {
 public:
  /// Throws std::invalid_argument if the matrix is not dim x dim.
  DensityMatrix(FockSpaceRef space, ComplexMatrix matrix);

  const FockSpace& space() const { return *space_; }
  std::size_t dim() const { return space_->dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  ComplexValue trace() const { return matrix_.trace(); }
  /// max |rho - rho^dagger|
  double hermiticity_defect() const;
  /// Ascending eigenvalues of the Hermitian part.
  Eigen::VectorXd eigenvalues() const;

 private:
  FockSpaceRef space_;
  ComplexMatrix matrix_;
};

struct TruncationReport {
  std::vector<std::size_t> dims_tried;
  /// Mean at each entry of dims_tried.
  std::vector<double> values;
  /// Variance at each entry of dims_tried.
  std::vector<double> variances;
  /// max(relative change of mean, of variance) between consecutive dims;
  /// one entry shorter than dims_tried.
  std::vector<double> rel_changes;
  bool converged = false;
  double final_rel_change = 0.0;
};

/// Oracle failure that still carries what was tried.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, TruncationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const TruncationReport& report() const { return report_; }

 private:
  TruncationReport report_;
};

/// max |m_ij| over the top-left block x block corner.
double max_abs_leading_block(const ComplexMatrix& m, std::size_t block);

/// max |U^dagger U - I| over the leading block of the space.
double unitarity_defect(const ModeOperator& u);

/// A B - B A
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(-(zeta/2) a^dagger^2 + (zeta^*/2) a^2) on the truncated space.
/// Throws OracleRangeError for r > r_max and ConvergenceError if the
/// leading-block unitarity defect exceeds the configured tolerance.
ModeOperator squeeze_operator(const FockSpaceRef& fs, const SqueezeParameter& z,
                              const OracleConfig& config = {});

/// exp(alpha a^dagger - alpha^* a) on the truncated space. Throws
/// OracleRangeError when |alpha|^2 exceeds the fill fraction of dim.
ModeOperator displacement_operator(const FockSpaceRef& fs,
                                   const CoherentAmplitude& a,
                                   const OracleConfig& config = {});

/// cosh(r) a + e^{i phi} sinh(r) a^dagger - alpha, assembled from the
/// ladder matrices.
ModeOperator b_operator(const FockSpaceRef& fs, const ModeParameters& p);

/// S(zeta) D(alpha) a D(-alpha) S(-zeta) formed by explicit matrix products.
/// The products run in guard_factor * N states so the intermediate sums are
/// not cut at N; the leading N x N corner is returned.
ModeOperator b_operator_by_conjugation(const FockSpaceRef& fs,
                                       const ModeParameters& p,
                                       const OracleConfig& config = {});

/// exp(-x a^dagger a) / Z_N, diagonal.
DensityMatrix thermal_density(const FockSpaceRef& fs,
                              DimensionlessTemperature x);

/// exp(-x B^dagger B) / Z, built as U rho_thermal U^dagger with
/// U = S(zeta) D(alpha).
DensityMatrix squeezed_thermal_density(const FockSpaceRef& fs,
                                       const ModeParameters& p,
                                       const OracleConfig& config = {});

/// Mean and variance by direct traces at the dimension of fs:
///   photons in squeezed thermal:  tr(rho_B n), tr(rho_B n^2) - mean^2
///   squeezed in photon thermal:   tr(rho_a B^dagger B), ...
NumberStatistics oracle_statistics(const FockSpaceRef& fs,
                                   const ModeParameters& p,
                                   StateOrdering which,
                                   const OracleConfig& config = {});

struct ConvergedStatistics {
  NumberStatistics statistics;
  TruncationReport report;
};

/// Runs oracle_statistics at start_dim, 2*start_dim, ... until mean and
/// variance both change by less than rel_tol between consecutive dims.
/// Dimensions too small for the displacement bound are skipped. Throws
/// DomainError for rel_tol <= 0, OracleRangeError for r > r_max, and
/// ConvergenceError (with the report) when dim_max is reached first.
ConvergedStatistics converge_statistics(const ModeParameters& p,
                                        StateOrdering which, double rel_tol,
                                        const OracleConfig& config = {});

}  // namespace sqstat

#endif  // SQSTAT_FOCK_ORACLE_HPP_
