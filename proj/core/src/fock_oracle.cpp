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

#include "sqstat/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "structured_expm.hpp"

namespace sqstat {

namespace {

using Index = Eigen::Index;

// S(r e^{i phi}) = P S(r) P^dagger with P = diag(e^{i phi m / 2}). S(r) is
// real and only couples m <-> m +- 2, so each parity sector is an
// antisymmetric tridiagonal exponential.
ComplexMatrix squeeze_matrix(std::size_t dim, const SqueezeParameter& z) {
  const Index n = static_cast<Index>(dim);
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  const double half_r = 0.5 * z.r();
  for (Index parity = 0; parity < 2; ++parity) {
    std::vector<Index> sites;
    for (Index m = parity; m < n; m += 2) sites.push_back(m);
    if (sites.empty()) continue;
    std::vector<double> superdiag;
    for (std::size_t k = 0; k + 1 < sites.size(); ++k) {
      const double m = static_cast<double>(sites[k]);
      superdiag.push_back(half_r * std::sqrt((m + 1.0) * (m + 2.0)));
    }
    const Eigen::MatrixXcd block =
        detail::expm_antisymmetric_tridiagonal(superdiag);
    for (std::size_t k = 0; k < sites.size(); ++k) {
      for (std::size_t j = 0; j < sites.size(); ++j) {
        s(sites[j], sites[k]) = block(static_cast<Index>(j),
                                      static_cast<Index>(k));
      }
    }
  }
  const double phi = z.phi();
  for (Index k = 0; k < n; ++k) {
    for (Index j = (k % 2); j < n; j += 2) {
      s(j, k) *= std::polar(1.0, 0.5 * phi * static_cast<double>(j - k));
    }
  }
  return s;
}

// D(|alpha| e^{i theta}) = Q D(|alpha|) Q^dagger with Q = diag(e^{i theta m}).
ComplexMatrix displacement_matrix(std::size_t dim, const CoherentAmplitude& a) {
  const Index n = static_cast<Index>(dim);
  std::vector<double> superdiag(dim - 1);
  for (std::size_t m = 0; m + 1 < dim; ++m) {
    superdiag[m] = -a.magnitude() * std::sqrt(static_cast<double>(m + 1));
  }
  ComplexMatrix d = detail::expm_antisymmetric_tridiagonal(superdiag);
  const double theta = a.theta();
  for (Index k = 0; k < n; ++k) {
    for (Index j = 0; j < n; ++j) {
      d(j, k) *= std::polar(1.0, theta * static_cast<double>(j - k));
    }
  }
  return d;
}

void require_squeeze_in_range(const SqueezeParameter& z,
                              const OracleConfig& config) {
  if (z.r() > config.r_max) {
    std::ostringstream msg;
    msg << "oracle refuses r = " << z.r() << " > r_max = " << config.r_max;
    throw OracleRangeError(msg.str());
  }
}

bool displacement_fits(std::size_t dim, const CoherentAmplitude& a,
                       const OracleConfig& config) {
  const double m = a.magnitude();
  return m * m <= config.displacement_fill_fraction * static_cast<double>(dim);
}

void require_displacement_fits(std::size_t dim, const CoherentAmplitude& a,
                               const OracleConfig& config) {
  if (!displacement_fits(dim, a, config)) {
    std::ostringstream msg;
    msg << "oracle refuses |alpha| = " << a.magnitude() << " at dim " << dim
        << " (|alpha|^2 must be <= " << config.displacement_fill_fraction
        << " * dim)";
    throw OracleRangeError(msg.str());
  }
}

double leading_unitarity_defect(const ComplexMatrix& u, std::size_t block) {
  const Index h = static_cast<Index>(block);
  const ComplexMatrix gram = u.leftCols(h).adjoint() * u.leftCols(h);
  return (gram - ComplexMatrix::Identity(h, h)).cwiseAbs().maxCoeff();
}

void require_unitary(const ComplexMatrix& u, std::size_t block,
                     const OracleConfig& config, const char* name) {
  if (block == 0) return;
  const double defect = leading_unitarity_defect(u, block);
  if (!(defect <= config.unitarity_tol)) {
    std::ostringstream msg;
    msg << name << " unitarity defect " << defect << " exceeds "
        << config.unitarity_tol << " at dim " << u.rows();
    throw ConvergenceError(msg.str(), {});
  }
}

Eigen::VectorXd thermal_weights(std::size_t dim, DimensionlessTemperature x) {
  Eigen::VectorXd w(static_cast<Index>(dim));
  for (Index n = 0; n < w.size(); ++n) {
    w(n) = std::exp(-x.value() * static_cast<double>(n));
  }
  return w / w.sum();
}

ComplexMatrix conjugating_unitary(const FockSpaceRef& fs,
                                  const ModeParameters& p,
                                  const OracleConfig& config) {
  return squeeze_operator(fs, p.squeeze, config).matrix() *
         displacement_operator(fs, p.coherent, config).matrix();
}

double relative_change(double current, double previous) {
  const double scale = std::max(std::abs(current), std::abs(previous));
  if (scale == 0.0) return 0.0;
  return std::abs(current - previous) / scale;
}

}  // namespace

FockSpace::FockSpace(std::size_t dim) : dim_(dim) {
  if (dim < 2) {
    throw DomainError("Fock space dimension must be >= 2, got " +
                      std::to_string(dim));
  }
  const Index n = static_cast<Index>(dim);
  annihilate_ = ComplexMatrix::Zero(n, n);
  for (Index m = 1; m < n; ++m) {
    annihilate_(m - 1, m) = std::sqrt(static_cast<double>(m));
  }
  create_ = annihilate_.adjoint();
}

ComplexMatrix FockSpace::number() const { return create_ * annihilate_; }

ComplexMatrix FockSpace::identity() const {
  const Index n = static_cast<Index>(dim_);
  return ComplexMatrix::Identity(n, n);
}

FockSpaceRef build_fock_space(std::size_t dim) {
  return std::make_shared<const FockSpace>(dim);
}

ModeOperator::ModeOperator(FockSpaceRef space, ComplexMatrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const Index n = static_cast<Index>(space_->dim());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("operator matrix does not match Fock space "
                                "dimension");
  }
}

ModeOperator ModeOperator::adjoint() const {
  return ModeOperator(space_, matrix_.adjoint());
}

DensityMatrix::DensityMatrix(FockSpaceRef space, ComplexMatrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const Index n = static_cast<Index>(space_->dim());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("density matrix does not match Fock space "
                                "dimension");
  }
}

double DensityMatrix::hermiticity_defect() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  const ComplexMatrix hermitian = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double max_abs_leading_block(const ComplexMatrix& m, std::size_t block) {
  const Index h = static_cast<Index>(block);
  if (h == 0) return 0.0;
  return m.topLeftCorner(h, h).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ModeOperator& u) {
  return leading_unitarity_defect(u.matrix(), u.space().leading_block());
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ModeOperator squeeze_operator(const FockSpaceRef& fs, const SqueezeParameter& z,
                              const OracleConfig& config) {
  require_squeeze_in_range(z, config);
  ComplexMatrix s = squeeze_matrix(fs->dim(), z);
  require_unitary(s, fs->leading_block(), config, "squeeze operator");
  return ModeOperator(fs, std::move(s));
}

ModeOperator displacement_operator(const FockSpaceRef& fs,
                                   const CoherentAmplitude& a,
                                   const OracleConfig& config) {
  require_displacement_fits(fs->dim(), a, config);
  ComplexMatrix d = displacement_matrix(fs->dim(), a);
  require_unitary(d, fs->leading_block(), config, "displacement operator");
  return ModeOperator(fs, std::move(d));
}

ModeOperator b_operator(const FockSpaceRef& fs, const ModeParameters& p) {
  const double r = p.squeeze.r();
  ComplexMatrix b = std::cosh(r) * fs->annihilate() +
                    p.squeeze.phase_factor() * std::sinh(r) * fs->create() -
                    p.coherent.value() * fs->identity();
  return ModeOperator(fs, std::move(b));
}

ModeOperator b_operator_by_conjugation(const FockSpaceRef& fs,
                                       const ModeParameters& p,
                                       const OracleConfig& config) {
  const std::size_t guard = std::max<std::size_t>(1, config.conjugation_guard_factor);
  const FockSpaceRef work = build_fock_space(guard * fs->dim());
  const ComplexMatrix u = conjugating_unitary(work, p, config);
  const ComplexMatrix b = u * work->annihilate() * u.adjoint();
  const Index n = static_cast<Index>(fs->dim());
  return ModeOperator(fs, b.topLeftCorner(n, n));
}

DensityMatrix thermal_density(const FockSpaceRef& fs,
                              DimensionlessTemperature x) {
  const Eigen::VectorXd w = thermal_weights(fs->dim(), x);
  return DensityMatrix(fs, w.cast<ComplexValue>().asDiagonal());
}

DensityMatrix squeezed_thermal_density(const FockSpaceRef& fs,
                                       const ModeParameters& p,
                                       const OracleConfig& config) {
  const ComplexMatrix u = conjugating_unitary(fs, p, config);
  const Eigen::VectorXd w = thermal_weights(fs->dim(), p.x);
  ComplexMatrix rho = u * w.cast<ComplexValue>().asDiagonal() * u.adjoint();
  return DensityMatrix(fs, std::move(rho));
}

NumberStatistics oracle_statistics(const FockSpaceRef& fs,
                                   const ModeParameters& p,
                                   StateOrdering which,
                                   const OracleConfig& config) {
  const Eigen::VectorXd w = thermal_weights(fs->dim(), p.x);
  const Index n = static_cast<Index>(fs->dim());
  double first = 0.0;
  double second = 0.0;
  if (which == StateOrdering::kPhotonsInSqueezedThermal) {
    require_squeeze_in_range(p.squeeze, config);
    // The number operator is diagonal, so only diag(U rho_a U^dagger) is
    // needed: rho_B(m, m) = sum_k |U(m, k)|^2 w_k.
    const ComplexMatrix u = conjugating_unitary(fs, p, config);
    const Eigen::VectorXd populations = u.cwiseAbs2() * w;
    for (Index m = 0; m < n; ++m) {
      const double dm = static_cast<double>(m);
      first += dm * populations(m);
      second += dm * dm * populations(m);
    }
  } else {
    // rho_a is diagonal: tr(rho_a X) = sum_k w_k X(k, k). For the Hermitian
    // M = B^dagger B, (M^2)(k, k) = sum_j |M(k, j)|^2.
    const ComplexMatrix b = b_operator(fs, p).matrix();
    const ComplexMatrix bb = b.adjoint() * b;
    for (Index k = 0; k < n; ++k) {
      first += w(k) * bb(k, k).real();
      second += w(k) * bb.row(k).squaredNorm();
    }
  }
  NumberStatistics out;
  out.mean = first;
  out.variance = second - first * first;
  return out;
}

ConvergedStatistics converge_statistics(const ModeParameters& p,
                                        StateOrdering which, double rel_tol,
                                        const OracleConfig& config) {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw DomainError("convergence tolerance must be finite and > 0");
  }
  require_squeeze_in_range(p.squeeze, config);
  const bool needs_displacement =
      which == StateOrdering::kPhotonsInSqueezedThermal;
  if (needs_displacement) {
    require_displacement_fits(config.dim_max, p.coherent, config);
  }

  TruncationReport report;
  NumberStatistics last;
  for (std::size_t dim = std::max<std::size_t>(2, config.start_dim);
       dim <= config.dim_max; dim *= 2) {
    if (needs_displacement && !displacement_fits(dim, p.coherent, config)) {
      continue;
    }
    const NumberStatistics current =
        oracle_statistics(build_fock_space(dim), p, which, config);
    if (!report.dims_tried.empty()) {
      const double change =
          std::max(relative_change(current.mean, last.mean),
                   relative_change(current.variance, last.variance));
      report.rel_changes.push_back(change);
      report.final_rel_change = change;
    }
    report.dims_tried.push_back(dim);
    report.values.push_back(current.mean);
    report.variances.push_back(current.variance);
    last = current;
    if (!report.rel_changes.empty() && report.final_rel_change < rel_tol) {
      report.converged = true;
      return {last, report};
    }
  }
  std::ostringstream msg;
  msg << "oracle did not converge to rel_tol " << rel_tol << " by dim "
      << config.dim_max << " (last relative change "
      << report.final_rel_change << ")";
  throw ConvergenceError(msg.str(), std::move(report));
}

}  // namespace sqstat
