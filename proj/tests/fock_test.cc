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

#include "qillum/fock.hpp"

#include <cmath>
#include <complex>

#include "gtest/gtest.h"

using namespace qillum;
using cd = std::complex<double>;

namespace {

// Independent route: alpha^n e^{-|alpha|^2/2} / sqrt(n!) via tgamma.
double poisson_amplitude(double alpha, int n) {
  return std::pow(alpha, n) * std::exp(-alpha * alpha / 2.0) / std::sqrt(std::tgamma(n + 1.0));
}

ComplexMatrix<double> projector(int n, int dim) {
  ComplexMatrix<double> m = ComplexMatrix<double>::Zero(dim, dim);
  m(n, n) = 1.0;
  return m;
}

}  // namespace

TEST(TruncationConfig, rejects_bad_values) {
  EXPECT_THROW((TruncationConfig{1}.validate()), std::invalid_argument);
  EXPECT_THROW((TruncationConfig{8, 1e-2}.validate()), std::invalid_argument);
  EXPECT_THROW((TruncationConfig{8, 0.0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((TruncationConfig{2, 1e-10}.validate()));
}

TEST(CoherentState, vacuum_at_zero_amplitude) {
  const auto psi = coherent_state<double>(cd(0, 0), {8});
  EXPECT_EQ(psi.amplitudes()(0), cd(1, 0));
  for (int n = 1; n < 8; ++n) EXPECT_EQ(psi.amplitudes()(n), cd(0, 0));
}

TEST(CoherentState, poisson_amplitudes) {
  const auto psi = coherent_state<double>(cd(1, 0), {16});
  EXPECT_NEAR(psi.amplitudes()(0).real(), 0.60653065971263342, 1e-15);
  for (int n = 0; n < 16; ++n) EXPECT_NEAR(psi.amplitudes()(n).real(), poisson_amplitude(1.0, n), 1e-14);
  EXPECT_GE(psi.amplitudes().squaredNorm(), 1.0 - 1e-10);
  EXPECT_LE(psi.norm_deficiency(), 1e-10);
}

TEST(CoherentState, complex_amplitude_phase) {
  const cd alpha = std::polar(0.7, 0.9);
  const auto psi = coherent_state<double>(alpha, {24});
  for (int n = 0; n < 24; ++n) {
    EXPECT_NEAR(std::abs(psi.amplitudes()(n)), poisson_amplitude(0.7, n), 1e-14);
    if (n > 0) EXPECT_NEAR(std::arg(psi.amplitudes()(n) / psi.amplitudes()(n - 1)), 0.9, 1e-12);
  }
}

TEST(CoherentState, truncation_inadequate) {
  try {
    coherent_state<double>(cd(3, 0), {8});
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_GT(e.suggested_dim(), 8);
    EXPECT_NO_THROW(coherent_state<double>(cd(3, 0), {e.suggested_dim()}));
  }
}

TEST(ThermalState, zero_temperature_is_vacuum) {
  const auto rho = thermal_state<double>(0.0, {6});
  EXPECT_EQ(rho.matrix(), projector(0, 6));
}

TEST(ThermalState, bose_einstein_diagonal) {
  const auto rho = thermal_state<double>(1.0, {40});
  for (int n = 0; n < 40; ++n) {
    EXPECT_NEAR(rho.matrix()(n, n).real(), std::pow(0.5, n + 1), 1e-16);
    for (int m = 0; m < 40; ++m) {
      if (m != n) EXPECT_EQ(rho.matrix()(n, m), cd(0, 0));
    }
  }
  EXPECT_LE(rho.trace_deficiency(), 1e-10);
}

TEST(ThermalState, truncation_inadequate) {
  EXPECT_THROW(thermal_state<double>(1.0, {4}), TruncationError);
  EXPECT_THROW(thermal_state<double>(-0.1, {8}), std::invalid_argument);
}

TEST(DisplacedThermalState, zero_displacement_is_thermal) {
  const TruncationConfig t{adaptive_dim(0.0, 0.5)};
  const auto a = displaced_thermal_state<double>(cd(0, 0), 0.5, t);
  const auto b = thermal_state<double>(0.5, t);
  EXPECT_LE((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(DisplacedThermalState, zero_temperature_is_coherent) {
  const TruncationConfig t{24};
  const auto a = displaced_thermal_state<double>(cd(1, 0), 0.0, t);
  const auto b = coherent_state<double>(cd(1, 0), t).density();
  EXPECT_LE((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DisplacedThermalState, mean_photon_number) {
  const auto rho = displaced_thermal_state<double>(cd(0.3, 0), 0.2, {32});
  EXPECT_NEAR(rho.mean_photon_number(), 0.29, 1e-8);
}

TEST(DisplacedThermalState, truncation_inadequate) {
  EXPECT_THROW(displaced_thermal_state<double>(cd(2.0, 0), 0.5, {10}), TruncationError);
}

TEST(DisplacedThermalState, phase_of_alpha_rotates_coherences) {
  const TruncationConfig t{30};
  const auto real = displaced_thermal_state<double>(cd(0.5, 0), 0.1, t);
  const auto rotated = displaced_thermal_state<double>(std::polar(0.5, 1.1), 0.1, t);
  // rho(e^{i phi} alpha)_{mn} = e^{i (m - n) phi} rho(alpha)_{mn}
  for (int m = 0; m < 6; ++m) {
    for (int n = 0; n < 6; ++n) {
      EXPECT_LE(std::abs(rotated.matrix()(m, n) - std::polar(1.0, 1.1 * (m - n)) * real.matrix()(m, n)), 1e-12);
    }
  }
}

TEST(StateInvariants, grid_of_states_is_valid) {
  for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    for (double nbar : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      const TruncationConfig t{adaptive_dim(alpha * alpha, nbar)};
      const auto rho = displaced_thermal_state<double>(cd(alpha, 0), nbar, t);
      EXPECT_LE(rho.trace_deficiency(), 1e-10) << alpha << " " << nbar;
      EXPECT_GE(rho.trace_deficiency(), -1e-12);
      EXPECT_GE(rho.eigenvalues().minCoeff(), -1e-10);
      EXPECT_NEAR(rho.mean_photon_number(), alpha * alpha + nbar, 1e-8) << alpha << " " << nbar;
      const auto th = thermal_state<double>(nbar, t);
      EXPECT_LE(th.trace_deficiency(), 1e-10);
    }
  }
}

TEST(DensityOperator, rejects_invalid_matrices) {
  ComplexMatrix<double> m = projector(0, 3);
  m(0, 1) = 0.1;
  EXPECT_THROW(DensityOperator<double>{m}, std::invalid_argument);
  EXPECT_THROW(DensityOperator<double>{ComplexMatrix<double>(projector(0, 3) * 0.5)}, std::invalid_argument);
  ComplexMatrix<double> negative = ComplexMatrix<double>::Zero(2, 2);
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  EXPECT_THROW(DensityOperator<double>{negative}, std::invalid_argument);
  EXPECT_THROW(DensityOperator<double>{ComplexMatrix<double>::Zero(2, 3)}, DimensionMismatch);
}

TEST(FractionalPower, identity_exponent) {
  const auto rho = displaced_thermal_state<double>(cd(0.4, 0), 0.3, {30});
  EXPECT_LE((matrix_fractional_power(rho, 1.0) - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FractionalPower, projector_is_idempotent) {
  const auto rho = coherent_state<double>(cd(0.8, 0), {24}).density();
  for (double s : {0.0, 0.25, 0.5, 1.0}) {
    EXPECT_LE((matrix_fractional_power(rho, s) - rho.matrix()).cwiseAbs().maxCoeff(), 1e-9) << s;
  }
}

TEST(FractionalPower, thermal_square_root) {
  const auto rho = thermal_state<double>(1.0, {40});
  const auto root = matrix_fractional_power(rho, 0.5);
  for (int n = 0; n < 40; ++n) {
    const double expected = std::pow(0.5, (n + 1) / 2.0);
    // Eigenvalues below the clip threshold are exactly zero.
    if (std::pow(0.5, n + 1) > kEigenClip) {
      EXPECT_NEAR(root(n, n).real(), expected, 1e-14);
    } else {
      EXPECT_EQ(root(n, n).real(), 0.0);
    }
  }
}

TEST(FractionalPower, support_projector_is_preserved) {
  const auto rho = coherent_state<double>(cd(1.0, 0), {20}).density();
  const auto support = matrix_fractional_power(rho, 0.0);
  for (double s : {0.2, 0.6, 0.9}) {
    const auto p = matrix_fractional_power(rho, s);
    EXPECT_LE((support * p - p).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((p * support - p).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_NEAR(support.trace().real(), 1.0, 1e-12);
}

TEST(FractionalPower, rejects_out_of_range_exponent) {
  const auto rho = thermal_state<double>(0.1, {16});
  EXPECT_THROW(matrix_fractional_power(rho, 1.5), std::invalid_argument);
  EXPECT_THROW(matrix_fractional_power(rho, -0.1), std::invalid_argument);
}

TEST(HelstromError, identical_states) {
  const auto rho = thermal_state<double>(0.3, {40});
  EXPECT_NEAR(helstrom_error(rho, rho), 0.5, 1e-15);
}

TEST(HelstromError, orthogonal_states) {
  const TruncationConfig t{4};
  EXPECT_NEAR(helstrom_error(number_state<double>(0, t).density(), number_state<double>(1, t).density()), 0.0, 1e-15);
}

TEST(HelstromError, vacuum_versus_weak_coherent_state) {
  const TruncationConfig t{30};
  const double e = helstrom_error(number_state<double>(0, t).density(), coherent_state<double>(cd(0.2, 0), t).density());
  EXPECT_NEAR(e, 0.40099171644796988, 1e-10);
}

TEST(HelstromError, prior_swap_symmetry) {
  const TruncationConfig t{adaptive_dim(0.5, 0.4)};
  const auto a = thermal_state<double>(0.4, t);
  const auto b = displaced_thermal_state<double>(cd(0.7, 0), 0.4, t);
  for (double prior : {0.2, 0.5, 0.7}) {
    const double e = helstrom_error(a, b, prior);
    EXPECT_NEAR(e, helstrom_error(b, a, 1.0 - prior), 1e-14);
    EXPECT_GE(e, 0.0);
    EXPECT_LE(e, std::min(prior, 1.0 - prior));
  }
}

TEST(HelstromError, dimension_mismatch) {
  EXPECT_THROW(helstrom_error(thermal_state<double>(0.0, {4}), thermal_state<double>(0.0, {5})), DimensionMismatch);
  const auto rho = thermal_state<double>(0.0, {4});
  EXPECT_THROW(helstrom_error(rho, rho, 1.0), std::invalid_argument);
}

TEST(PhotonNumberDistribution, vacuum_coherent_thermal) {
  const auto vac = photon_number_distribution(thermal_state<double>(0.0, {8}));
  EXPECT_EQ(vac[0], 1.0);
  for (std::size_t n = 1; n < vac.size(); ++n) EXPECT_EQ(vac[n], 0.0);

  const auto coh = photon_number_distribution(coherent_state<double>(cd(1, 0), {20}).density());
  EXPECT_NEAR(coh[0], 0.36787944117144233, 1e-15);
  EXPECT_NEAR(coh[3], std::exp(-1.0) / 6.0, 1e-15);

  const auto th = photon_number_distribution(thermal_state<double>(1.0, {40}));
  for (std::size_t n = 0; n < th.size(); ++n) EXPECT_NEAR(th[n], std::pow(0.5, n + 1.0), 1e-16);
  EXPECT_GE(th.total(), 1.0 - 1e-10);
  EXPECT_LE(th.total(), 1.0);
}

TEST(ScalarGenericity, long_double_matches_double) {
  const TruncationConfig t{32};
  using ld = long double;
  const auto a = thermal_state<ld>(0.2L, t);
  const auto b = displaced_thermal_state<ld>(std::complex<ld>(0.4L, 0.0L), 0.2L, t);
  const auto ad = thermal_state<double>(0.2, t);
  const auto bd = displaced_thermal_state<double>(cd(0.4, 0), 0.2, t);
  EXPECT_NEAR(static_cast<double>(helstrom_error(a, b)), helstrom_error(ad, bd), 1e-13);
  EXPECT_NEAR(static_cast<double>(b.mean_photon_number()), 0.36, 1e-12);
}

TEST(AdaptiveDim, covers_thermal_tail) {
  for (double nbar : {0.01, 0.1, 1.0, 2.0}) {
    const int dim = adaptive_dim(0.0, nbar);
    EXPECT_LE(std::pow(nbar / (nbar + 1.0), dim), 1e-10) << nbar;
  }
  EXPECT_LE(adaptive_dim(0.05, 1.0), 64);
}
