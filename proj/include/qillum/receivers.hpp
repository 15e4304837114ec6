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

#ifndef QILLUM_RECEIVERS_HPP
#define QILLUM_RECEIVERS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "qillum/bounds.hpp"
#include "qillum/distribution.hpp"

namespace qillum {

/// Quadrature statistics under the two hypotheses. Units put the vacuum
/// variance at 1/4 and a coherent state's mean at its real amplitude.
struct GaussianPair {
  double mean0 = 0.0;
  double mean1 = 0.0;
  double variance = 0.25;

  double sigma() const;
  void validate() const;
};

struct ThresholdPolicy {
  enum class Kind { Midpoint, ExhaustiveOptimal, Fixed };
  Kind kind = Kind::ExhaustiveOptimal;
  double value = 0.0;

  static ThresholdPolicy midpoint() { return {Kind::Midpoint, 0.0}; }
  static ThresholdPolicy exhaustive_optimal() { return {Kind::ExhaustiveOptimal, 0.0}; }
  static ThresholdPolicy fixed(double v) { return {Kind::Fixed, v}; }
};

struct PhotonCountingDecision {
  double error = 0.5;
  /// Decide "target present" when the count is >= threshold.
  int threshold = 0;
};

/// Equal-prior error of the rule "count >= t means target present".
double photon_counting_error_at(const DiscreteDistribution& dist0, const DiscreteDistribution& dist1, int threshold);

/// Midpoint uses the smallest integer >= (mean0 + mean1) / 2; fixed rounds
/// its value up; exhaustive-optimal scans t = 0..size and keeps the
/// smallest minimizer.
PhotonCountingDecision photon_counting_error(const DiscreteDistribution& dist0, const DiscreteDistribution& dist1,
                                             ThresholdPolicy policy = ThresholdPolicy::exhaustive_optimal());

/// Homodyne outcome statistics. With coherent combining the N shots act as
/// one super-mode of intensity kappa * N * signal; otherwise the pair is
/// for a single shot.
GaussianPair homodyne_statistics(const ChannelParams& params, double signal_photons_per_shot = 1.0,
                                 bool coherent_combining = true);

/// Equal-prior threshold error. Midpoint and exhaustive-optimal coincide
/// for equal variances.
double homodyne_error(const GaussianPair& pair, ThresholdPolicy policy = ThresholdPolicy::midpoint());

/// Samples both densities as h * pdf(x) on a shared uniform grid. For
/// Gaussians this trapezoid rule is accurate to rounding, so Chernoff sums
/// over the result reproduce the continuous integrals.
std::pair<DiscreteDistribution, DiscreteDistribution> homodyne_distributions(const GaussianPair& pair,
                                                                             int points_per_sigma = 16,
                                                                             double half_width_sigmas = 14.0);

/// Probability that a strict majority of n_shots (odd) independent
/// decisions, each wrong with probability p, is wrong.
double majority_vote_exact(double p, long long n_shots);

enum class Scenario { PhotonCounting, Homodyne, MajorityVote };

std::string_view to_string(Scenario s);
Scenario scenario_from_string(std::string_view s);

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double error_rate = 0.0;
  double ci_halfwidth_3sigma = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const TrialStats&) const = default;
};

inline constexpr std::uint64_t kMinMonteCarloTrials = 10000;

/// Exact error probability of the receiver that monte_carlo simulates.
///
///  - photon-counting: thermal(N_B) vs displaced_thermal(sqrt(kappa N), N_B)
///    number statistics, exhaustive-optimal threshold.
///  - homodyne: coherently combined quadrature pair, midpoint threshold.
///  - majority-vote: per-shot error cs_single_shot_error(kappa), N odd.
double exact_error(Scenario scenario, const ChannelParams& params);

/// Seeded simulation of `trials` equiprobable detection trials. Trial i
/// draws only from the counter-based stream (seed, i), so the result does
/// not depend on `workers` (0 picks the hardware concurrency).
TrialStats monte_carlo(Scenario scenario, const ChannelParams& params, std::uint64_t trials, std::uint64_t seed,
                       unsigned workers = 0);

/// True when |error_rate - exact| lies within the 3 sigma half-width.
bool within_ci(const TrialStats& stats, double exact);

}  // namespace qillum

#endif  // QILLUM_RECEIVERS_HPP
