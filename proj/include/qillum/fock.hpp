// Copyright 2026 The qillum Authors
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

#ifndef QILLUM_FOCK_HPP
#define QILLUM_FOCK_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qillum/distribution.hpp"
#include "qillum/errors.hpp"

namespace qillum {

inline constexpr double kDefaultLeakageTol = 1e-10;
/// Eigenvalues at or below this are treated as exactly zero.
inline constexpr double kEigenClip = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kMinEigenvalue = -1e-10;

struct TruncationConfig {
  int dim = 32;
  double leakage_tol = kDefaultLeakageTol;

  void validate() const {
    if (dim < 2) throw std::invalid_argument("TruncationConfig: dim must be >= 2");
    if (!(leakage_tol > 0.0 && leakage_tol < 1e-3)) {
      throw std::invalid_argument("TruncationConfig: leakage_tol must lie in (0, 1e-3)");
    }
  }
};

/// Fock dimension adequate for a displaced thermal state with coherent
/// intensity `signal` = |alpha|^2 and thermal occupation `nbar`.
///
/// The larger of ceil(mean + 10 sqrt(mean + 1) + 10) and the geometric
/// thermal tail length at `leakage_tol` plus the coherent spread.
inline int adaptive_dim(double signal, double nbar, double leakage_tol = kDefaultLeakageTol) {
  const double mean = signal + nbar;
  double dim = std::ceil(mean + 10.0 * std::sqrt(mean + 1.0) + 10.0);
  if (nbar > 0.0) {
    const double tail = std::ceil(std::log(leakage_tol) / std::log(nbar / (nbar + 1.0)));
    const double spread = std::ceil(signal + 10.0 * std::sqrt(signal + 1.0));
    const double shifted = std::ceil(std::pow(std::sqrt(tail) + std::sqrt(signal), 2)) + 10.0;
    dim = std::max({dim, tail + spread, shifted});
  }
  return std::max(2, static_cast<int>(dim));
}

template <typename Scalar = double>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar = double>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar = double>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Clipped eigenvalue power: zero on the clipped kernel for every s in [0, 1].
template <typename Scalar>
Scalar clipped_power(Scalar lambda, Scalar s) {
  using std::pow;
  return lambda > Scalar(kEigenClip) ? pow(lambda, s) : Scalar(0);
}

template <typename Scalar = double>
class DensityOperator {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = ComplexMatrix<Scalar>;

  /// Validates hermiticity, trace and positivity, and caches the
  /// eigendecomposition for later fractional powers.
  explicit DensityOperator(Matrix matrix, double leakage_tol = kDefaultLeakageTol)
      : matrix_(std::move(matrix)), leakage_tol_(leakage_tol) {
    using std::abs;
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
      throw DimensionMismatch("DensityOperator: matrix must be square and non-empty");
    }
    if (!matrix_.allFinite()) throw std::invalid_argument("DensityOperator: non-finite entries");
    const Scalar asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > Scalar(kHermitianTol)) {
      throw std::invalid_argument("DensityOperator: not Hermitian (max asymmetry " +
                                  std::to_string(static_cast<double>(asym)) + ")");
    }
    const Scalar tr = matrix_.trace().real();
    if (tr < Scalar(1.0 - leakage_tol) || tr > Scalar(1.0 + 1e-12)) {
      throw std::invalid_argument("DensityOperator: trace " + std::to_string(static_cast<double>(tr)) +
                                  " outside [1 - leakage_tol, 1]");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_);
    if (solver.info() != Eigen::Success) throw std::runtime_error("DensityOperator: eigensolver failed");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
    if (eigenvalues_.minCoeff() < Scalar(kMinEigenvalue)) {
      throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                  std::to_string(static_cast<double>(eigenvalues_.minCoeff())));
    }
  }

  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  double leakage_tol() const noexcept { return leakage_tol_; }
  /// Ascending, unclipped.
  const RealVector<Scalar>& eigenvalues() const noexcept { return eigenvalues_; }
  const Matrix& eigenvectors() const noexcept { return eigenvectors_; }

  Scalar trace_deficiency() const { return Scalar(1) - matrix_.trace().real(); }

  Scalar mean_photon_number() const {
    Scalar m = 0;
    for (Eigen::Index n = 1; n < dim(); ++n) m += Scalar(n) * matrix_(n, n).real();
    return m;
  }

 private:
  Matrix matrix_;
  double leakage_tol_;
  RealVector<Scalar> eigenvalues_;
  Matrix eigenvectors_;
};

template <typename Scalar = double>
class StateVector {
 public:
  using Vector = ComplexVector<Scalar>;

  explicit StateVector(Vector amplitudes, double leakage_tol = kDefaultLeakageTol)
      : amplitudes_(std::move(amplitudes)), leakage_tol_(leakage_tol) {
    const Scalar norm2 = amplitudes_.squaredNorm();
    if (!(norm2 >= Scalar(1.0 - leakage_tol) && norm2 <= Scalar(1.0 + 1e-12))) {
      throw std::invalid_argument("StateVector: squared norm " + std::to_string(static_cast<double>(norm2)) +
                                  " outside [1 - leakage_tol, 1]");
    }
  }

  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  Scalar norm_deficiency() const { return Scalar(1) - amplitudes_.squaredNorm(); }

  DensityOperator<Scalar> density() const {
    ComplexMatrix<Scalar> rho = amplitudes_ * amplitudes_.adjoint();
    rho = (rho + rho.adjoint()).eval() / Scalar(2);
    return DensityOperator<Scalar>(std::move(rho), leakage_tol_);
  }

 private:
  Vector amplitudes_;
  double leakage_tol_;
};

template <typename Scalar = double>
StateVector<Scalar> number_state(int n, const TruncationConfig& trunc) {
  trunc.validate();
  if (n < 0 || n >= trunc.dim) throw std::out_of_range("number_state: n outside the truncated basis");
  ComplexVector<Scalar> v = ComplexVector<Scalar>::Zero(trunc.dim);
  v(n) = Scalar(1);
  return StateVector<Scalar>(std::move(v), trunc.leakage_tol);
}

/// |alpha> truncated to trunc.dim levels. Never renormalized.
template <typename Scalar = double>
StateVector<Scalar> coherent_state(std::complex<Scalar> alpha, const TruncationConfig& trunc) {
  using std::exp;
  using std::norm;
  using std::sqrt;
  trunc.validate();
  ComplexVector<Scalar> v(trunc.dim);
  v(0) = exp(-norm(alpha) / Scalar(2));
  for (int n = 1; n < trunc.dim; ++n) v(n) = v(n - 1) * alpha / sqrt(Scalar(n));
  const Scalar deficiency = Scalar(1) - v.squaredNorm();
  if (deficiency > Scalar(trunc.leakage_tol)) {
    const int suggested = adaptive_dim(static_cast<double>(norm(alpha)), 0.0, trunc.leakage_tol);
    throw TruncationError("coherent_state: norm deficiency " + std::to_string(static_cast<double>(deficiency)) +
                              " exceeds leakage_tol at dim " + std::to_string(trunc.dim),
                          std::max(suggested, 2 * trunc.dim));
  }
  return StateVector<Scalar>(std::move(v), trunc.leakage_tol);
}

/// Bose-Einstein diagonal state nbar^n / (nbar + 1)^(n + 1).
template <typename Scalar = double>
DensityOperator<Scalar> thermal_state(Scalar nbar, const TruncationConfig& trunc) {
  using std::pow;
  trunc.validate();
  if (!(nbar >= Scalar(0))) throw std::invalid_argument("thermal_state: nbar must be >= 0");
  const Scalar ratio = nbar / (nbar + Scalar(1));
  const Scalar tail = pow(ratio, Scalar(trunc.dim));
  if (tail > Scalar(trunc.leakage_tol)) {
    throw TruncationError("thermal_state: geometric tail " + std::to_string(static_cast<double>(tail)) +
                              " beyond dim " + std::to_string(trunc.dim) + " exceeds leakage_tol",
                          adaptive_dim(0.0, static_cast<double>(nbar), trunc.leakage_tol));
  }
  ComplexMatrix<Scalar> rho = ComplexMatrix<Scalar>::Zero(trunc.dim, trunc.dim);
  Scalar p = Scalar(1) / (nbar + Scalar(1));
  for (int n = 0; n < trunc.dim; ++n) {
    rho(n, n) = p;
    p *= ratio;
  }
  return DensityOperator<Scalar>(std::move(rho), trunc.leakage_tol);
}

/// Truncated annihilation operator on `dim` levels.
template <typename Scalar = double>
ComplexMatrix<Scalar> annihilation(int dim) {
  using std::sqrt;
  ComplexMatrix<Scalar> a = ComplexMatrix<Scalar>::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = sqrt(Scalar(n));
  return a;
}

/// exp(alpha a^dag - alpha^* a) on `dim` levels. The generator is
/// anti-Hermitian, so the truncated exponential is exactly unitary; it
/// only matches the true displacement on levels far below `dim`.
template <typename Scalar = double>
ComplexMatrix<Scalar> displacement_operator(std::complex<Scalar> alpha, int dim) {
  using Complex = std::complex<Scalar>;
  const ComplexMatrix<Scalar> a = annihilation<Scalar>(dim);
  // H = i (alpha a^dag - alpha^* a) is Hermitian and D = exp(-i H).
  ComplexMatrix<Scalar> h = Complex(0, 1) * (alpha * a.adjoint() - std::conj(alpha) * a);
  h = (h + h.adjoint()).eval() / Scalar(2);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("displacement_operator: eigensolver failed");
  ComplexVector<Scalar> phases(dim);
  for (int k = 0; k < dim; ++k) phases(k) = std::exp(Complex(0, -solver.eigenvalues()(k)));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

/// D(alpha) rho_thermal(nbar) D(alpha)^dag, built on a 2x workspace and
/// cropped to trunc.dim. Trace deficiency is checked, not renormalized.
template <typename Scalar = double>
DensityOperator<Scalar> displaced_thermal_state(std::complex<Scalar> alpha, Scalar nbar,
                                                const TruncationConfig& trunc) {
  using std::pow;
  trunc.validate();
  if (!(nbar >= Scalar(0))) throw std::invalid_argument("displaced_thermal_state: nbar must be >= 0");
  const int workspace = 2 * trunc.dim;
  const Scalar ratio = nbar / (nbar + Scalar(1));
  RealVector<Scalar> occupation(workspace);
  Scalar p = Scalar(1) / (nbar + Scalar(1));
  for (int n = 0; n < workspace; ++n) {
    occupation(n) = p;
    p *= ratio;
  }
  const ComplexMatrix<Scalar> d = displacement_operator<Scalar>(alpha, workspace);
  const ComplexMatrix<Scalar> top = d.topRows(trunc.dim);
  ComplexMatrix<Scalar> rho = top * occupation.asDiagonal() * top.adjoint();
  rho = (rho + rho.adjoint()).eval() / Scalar(2);

  const Scalar deficiency = Scalar(1) - rho.trace().real();
  if (deficiency > Scalar(trunc.leakage_tol)) {
    const int suggested =
        adaptive_dim(static_cast<double>(std::norm(alpha)), static_cast<double>(nbar), trunc.leakage_tol);
    throw TruncationError("displaced_thermal_state: trace deficiency " +
                              std::to_string(static_cast<double>(deficiency)) + " exceeds leakage_tol at dim " +
                              std::to_string(trunc.dim),
                          std::max(suggested, trunc.dim + 1));
  }
  return DensityOperator<Scalar>(std::move(rho), trunc.leakage_tol);
}

/// rho^s on the support of rho; clipped eigenvalues map to zero for every
/// s in [0, 1], so s = 0 yields the support projector.
template <typename Scalar = double>
ComplexMatrix<Scalar> matrix_fractional_power(const DensityOperator<Scalar>& rho, Scalar s) {
  if (!(s >= Scalar(0) && s <= Scalar(1))) throw std::invalid_argument("matrix_fractional_power: s outside [0, 1]");
  const auto& lambda = rho.eigenvalues();
  RealVector<Scalar> powered(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) powered(k) = clipped_power(lambda(k), s);
  const auto& v = rho.eigenvectors();
  return v * powered.template cast<std::complex<Scalar>>().asDiagonal() * v.adjoint();
}

/// Sum of absolute eigenvalues of a Hermitian matrix, with clipping.
template <typename Scalar = double>
Scalar trace_norm(const ComplexMatrix<Scalar>& hermitian) {
  using std::abs;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("trace_norm: eigensolver failed");
  Scalar sum = 0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const Scalar l = abs(solver.eigenvalues()(k));
    if (l > Scalar(kEigenClip)) sum += l;
  }
  return sum;
}

/// Minimum error probability of the optimal two-outcome measurement.
template <typename Scalar = double>
Scalar helstrom_error(const DensityOperator<Scalar>& rho0, const DensityOperator<Scalar>& rho1,
                      Scalar prior0 = Scalar(0.5)) {
  if (rho0.dim() != rho1.dim()) throw DimensionMismatch("helstrom_error: states have different dimensions");
  if (!(prior0 > Scalar(0) && prior0 < Scalar(1))) throw std::invalid_argument("helstrom_error: prior0 outside (0, 1)");
  const Scalar prior1 = Scalar(1) - prior0;
  ComplexMatrix<Scalar> gamma = prior1 * rho1.matrix() - prior0 * rho0.matrix();
  gamma = (gamma + gamma.adjoint()).eval() / Scalar(2);
  const Scalar err = (Scalar(1) - trace_norm<Scalar>(gamma)) / Scalar(2);
  return std::clamp(err, Scalar(0), std::min(prior0, prior1));
}

/// Number-basis measurement statistics (the diagonal of rho).
template <typename Scalar = double>
DiscreteDistribution photon_number_distribution(const DensityOperator<Scalar>& rho) {
  std::vector<double> mass(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index n = 0; n < rho.dim(); ++n) {
    mass[static_cast<std::size_t>(n)] = std::max(0.0, static_cast<double>(rho.matrix()(n, n).real()));
  }
  return DiscreteDistribution::counts(std::move(mass),
                                      std::max(DiscreteDistribution::kMassTolerance, rho.leakage_tol()));
}

}  // namespace qillum

#endif  // QILLUM_FOCK_HPP
