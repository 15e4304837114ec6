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

#ifndef QILLUM_CHERNOFF_HPP
#define QILLUM_CHERNOFF_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qillum/distribution.hpp"
#include "qillum/errors.hpp"
#include "qillum/fock.hpp"

namespace qillum {

/// Minimized Chernoff quantity q = min_s Tr(rho0^s rho1^(1-s)) and its
/// per-copy error exponent -ln q.
struct ChernoffResult {
  double q = 1.0;
  double s_star = 0.5;
  double exponent = 0.0;
  int evaluations = 0;
};

struct UnitIntervalMinimum {
  double s = 0.5;
  double value = 0.0;
  int evaluations = 0;
};

inline constexpr int kChernoffGridPoints = 41;
inline constexpr double kChernoffSTol = 1e-6;
/// Objective spread below which the minimizer reports s* = 1/2.
inline constexpr double kFlatObjectiveTol = 1e-12;

/// Minimizes f over [0, 1]: uniform grid of 41 points including both
/// endpoints, then golden-section search on the bracketing cells until the
/// bracket is narrower than 1e-6. A flat objective reports s = 1/2.
UnitIntervalMinimum minimize_on_unit_interval(const std::function<double(double)>& f);

/// Packs a minimum into a ChernoffResult, rejecting non-finite values.
ChernoffResult to_chernoff_result(const UnitIntervalMinimum& m);

/// e^(-n_shots * exponent) / 2 clipped to [0, 1/2].
double bound_from_exponent(double exponent, long long n_shots);

/// Sum_x p0(x)^s p1(x)^(1-s), with zero mass contributing zero at every s.
double classical_chernoff_objective(const DiscreteDistribution& p0, const DiscreteDistribution& p1, double s);

ChernoffResult classical_chernoff(const DiscreteDistribution& p0, const DiscreteDistribution& p1);

/// Tr(rho0^s rho1^(1-s)) evaluated from cached eigendecompositions:
/// sum_ij lambda0_i^s |<u0_i|u1_j>|^2 lambda1_j^(1-s), restricted to the supports.
template <typename Scalar = double>
class QuantumChernoffObjective {
 public:
  QuantumChernoffObjective(const DensityOperator<Scalar>& rho0, const DensityOperator<Scalar>& rho1) {
    if (rho0.dim() != rho1.dim()) throw DimensionMismatch("quantum_chernoff: states have different dimensions");
    const std::vector<Eigen::Index> support0 = support(rho0), support1 = support(rho1);
    lambda0_.resize(static_cast<Eigen::Index>(support0.size()));
    lambda1_.resize(static_cast<Eigen::Index>(support1.size()));
    ComplexMatrix<Scalar> u0(rho0.dim(), lambda0_.size()), u1(rho1.dim(), lambda1_.size());
    for (std::size_t k = 0; k < support0.size(); ++k) {
      lambda0_(k) = rho0.eigenvalues()(support0[k]);
      u0.col(k) = rho0.eigenvectors().col(support0[k]);
    }
    for (std::size_t k = 0; k < support1.size(); ++k) {
      lambda1_(k) = rho1.eigenvalues()(support1[k]);
      u1.col(k) = rho1.eigenvectors().col(support1[k]);
    }
    overlap_ = (u0.adjoint() * u1).cwiseAbs2();
  }

  double operator()(double s) const {
    using std::pow;
    const Scalar ss = Scalar(s);
    RealVector<Scalar> a(lambda0_.size()), b(lambda1_.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = pow(lambda0_(i), ss);
    for (Eigen::Index j = 0; j < b.size(); ++j) b(j) = pow(lambda1_(j), Scalar(1) - ss);
    return static_cast<double>(a.dot(overlap_ * b));
  }

 private:
  static std::vector<Eigen::Index> support(const DensityOperator<Scalar>& rho) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index k = 0; k < rho.eigenvalues().size(); ++k) {
      if (rho.eigenvalues()(k) > Scalar(kEigenClip)) idx.push_back(k);
    }
    return idx;
  }

  RealVector<Scalar> lambda0_, lambda1_;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> overlap_;
};

template <typename Scalar = double>
ChernoffResult quantum_chernoff(const DensityOperator<Scalar>& rho0, const DensityOperator<Scalar>& rho1) {
  const QuantumChernoffObjective<Scalar> objective(rho0, rho1);
  return to_chernoff_result(minimize_on_unit_interval(objective));
}

}  // namespace qillum

#endif  // QILLUM_CHERNOFF_HPP
