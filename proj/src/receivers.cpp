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

#include "qillum/receivers.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

#include "qillum/counter_rng.hpp"
#include "qillum/fock.hpp"

namespace qillum {

double GaussianPair::sigma() const { return std::sqrt(variance); }

void GaussianPair::validate() const {
  if (!(variance > 0.0) || !std::isfinite(variance)) throw std::invalid_argument("GaussianPair: variance must be > 0");
  if (!std::isfinite(mean0) || !std::isfinite(mean1)) throw std::invalid_argument("GaussianPair: non-finite mean");
  if (mean1 < mean0) throw std::invalid_argument("GaussianPair: mean1 must not be below mean0");
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

double photon_counting_error_at(const DiscreteDistribution& dist0, const DiscreteDistribution& dist1, int threshold) {
  if (!dist0.same_support(dist1)) throw DimensionMismatch("photon_counting_error: supports differ");
  const auto t = static_cast<std::size_t>(std::clamp(threshold, 0, static_cast<int>(dist0.size())));
  double false_alarm = 0.0, miss = 0.0;
  for (std::size_t n = t; n < dist0.size(); ++n) false_alarm += dist0[n];
  for (std::size_t n = 0; n < t; ++n) miss += dist1[n];
  return 0.5 * (false_alarm + miss);
}

PhotonCountingDecision photon_counting_error(const DiscreteDistribution& dist0, const DiscreteDistribution& dist1,
                                             ThresholdPolicy policy) {
  if (!dist0.same_support(dist1)) throw DimensionMismatch("photon_counting_error: supports differ");
  const int size = static_cast<int>(dist0.size());
  switch (policy.kind) {
    case ThresholdPolicy::Kind::Midpoint: {
      const int t = std::clamp(static_cast<int>(std::ceil(0.5 * (dist0.mean() + dist1.mean()))), 0, size);
      return {photon_counting_error_at(dist0, dist1, t), t};
    }
    case ThresholdPolicy::Kind::Fixed: {
      if (!std::isfinite(policy.value)) throw std::invalid_argument("ThresholdPolicy: fixed value must be finite");
      const int t = static_cast<int>(std::clamp(std::ceil(policy.value), 0.0, static_cast<double>(size)));
      return {photon_counting_error_at(dist0, dist1, t), t};
    }
    case ThresholdPolicy::Kind::ExhaustiveOptimal:
      break;
  }
  // Running sums: error(t) = (P0[n >= t] + P1[n < t]) / 2.
  double false_alarm = dist0.total(), miss = 0.0;
  PhotonCountingDecision best{0.5 * false_alarm, 0};
  for (int t = 1; t <= size; ++t) {
    false_alarm -= dist0[static_cast<std::size_t>(t - 1)];
    miss += dist1[static_cast<std::size_t>(t - 1)];
    const double e = 0.5 * (std::max(false_alarm, 0.0) + miss);
    if (e < best.error) best = {e, t};
  }
  return best;
}

GaussianPair homodyne_statistics(const ChannelParams& params, double signal_photons_per_shot,
                                 bool coherent_combining) {
  params.validate();
  if (!(signal_photons_per_shot > 0.0)) {
    throw std::invalid_argument("homodyne_statistics: signal_photons_per_shot must be > 0");
  }
  const double intensity = params.kappa * signal_photons_per_shot *
                           (coherent_combining ? static_cast<double>(params.shots) : 1.0);
  return GaussianPair{0.0, std::sqrt(intensity), (2.0 * params.n_b + 1.0) / 4.0};
}

double homodyne_error(const GaussianPair& pair, ThresholdPolicy policy) {
  pair.validate();
  const double sigma = pair.sigma();
  if (policy.kind == ThresholdPolicy::Kind::Fixed) {
    if (!std::isfinite(policy.value)) throw std::invalid_argument("ThresholdPolicy: fixed value must be finite");
    const double false_alarm = normal_cdf((pair.mean0 - policy.value) / sigma);
    const double miss = normal_cdf((policy.value - pair.mean1) / sigma);
    return 0.5 * (false_alarm + miss);
  }
  return normal_cdf(-(pair.mean1 - pair.mean0) / (2.0 * sigma));
}

std::pair<DiscreteDistribution, DiscreteDistribution> homodyne_distributions(const GaussianPair& pair,
                                                                             int points_per_sigma,
                                                                             double half_width_sigmas) {
  pair.validate();
  if (points_per_sigma < 1 || !(half_width_sigmas > 0.0)) {
    throw std::invalid_argument("homodyne_distributions: invalid grid");
  }
  const double sigma = pair.sigma();
  const double h = sigma / points_per_sigma;
  const double center = 0.5 * (pair.mean0 + pair.mean1);
  const double half_width = half_width_sigmas * sigma + 0.5 * (pair.mean1 - pair.mean0);
  const auto half = static_cast<long>(std::ceil(half_width / h));
  const double norm = h / (sigma * std::sqrt(2.0 * std::numbers::pi));

  std::vector<double> x, p0, p1;
  x.reserve(static_cast<std::size_t>(2 * half + 1));
  for (long i = -half; i <= half; ++i) {
    const double xi = center + static_cast<double>(i) * h;
    const double z0 = (xi - pair.mean0) / sigma, z1 = (xi - pair.mean1) / sigma;
    x.push_back(xi);
    p0.push_back(norm * std::exp(-0.5 * z0 * z0));
    p1.push_back(norm * std::exp(-0.5 * z1 * z1));
  }
  return {DiscreteDistribution(x, std::move(p0)), DiscreteDistribution(x, std::move(p1))};
}

double majority_vote_exact(double p, long long n_shots) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("majority_vote_exact: p must lie in [0, 1]");
  if (n_shots < 1 || n_shots % 2 == 0) throw std::invalid_argument("majority_vote_exact: n_shots must be odd");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  const double n = static_cast<double>(n_shots);
  const double log_p = std::log(p), log_q = std::log1p(-p);
  const double log_n_fact = std::lgamma(n + 1.0);
  double sum = 0.0;
  for (long long k = n_shots / 2 + 1; k <= n_shots; ++k) {
    const double kk = static_cast<double>(k);
    sum += std::exp(log_n_fact - std::lgamma(kk + 1.0) - std::lgamma(n - kk + 1.0) + kk * log_p + (n - kk) * log_q);
  }
  return std::min(sum, 1.0);
}

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::PhotonCounting:
      return "photon-counting";
    case Scenario::Homodyne:
      return "homodyne";
    case Scenario::MajorityVote:
      return "majority-vote";
  }
  return "unknown";
}

Scenario scenario_from_string(std::string_view s) {
  if (s == "photon-counting") return Scenario::PhotonCounting;
  if (s == "homodyne") return Scenario::Homodyne;
  if (s == "majority-vote") return Scenario::MajorityVote;
  throw std::invalid_argument("unknown scenario: " + std::string(s));
}

namespace {

struct PhotonCountingModel {
  std::vector<double> cdf0, cdf1;
  int threshold = 0;
  double exact = 0.5;

  explicit PhotonCountingModel(const ChannelParams& params) {
    const double signal = params.kappa * static_cast<double>(params.shots);
    const TruncationConfig trunc{adaptive_dim(signal, params.n_b)};
    const auto d0 = photon_number_distribution(thermal_state<double>(params.n_b, trunc));
    const auto d1 = photon_number_distribution(
        displaced_thermal_state<double>(std::complex<double>(std::sqrt(signal), 0.0), params.n_b, trunc));
    const auto decision = photon_counting_error(d0, d1);
    threshold = decision.threshold;
    exact = decision.error;
    cdf0 = cumulative(d0);
    cdf1 = cumulative(d1);
  }

  static std::vector<double> cumulative(const DiscreteDistribution& d) {
    std::vector<double> c(d.size());
    double acc = 0.0;
    for (std::size_t n = 0; n < d.size(); ++n) c[n] = acc += d[n];
    return c;
  }

  bool trial_error(CounterRng& rng) const {
    const bool target = rng.uniform() >= 0.5;
    const auto& cdf = target ? cdf1 : cdf0;
    // Inverse-CDF draw; u past the truncated mass lands at n = size.
    const auto n = std::upper_bound(cdf.begin(), cdf.end(), rng.uniform()) - cdf.begin();
    return (n >= threshold) != target;
  }
};

struct HomodyneModel {
  GaussianPair pair;
  double threshold = 0.0;
  double exact = 0.5;

  explicit HomodyneModel(const ChannelParams& params)
      : pair(homodyne_statistics(params)),
        threshold(0.5 * (pair.mean0 + pair.mean1)),
        exact(homodyne_error(pair, ThresholdPolicy::midpoint())) {}

  bool trial_error(CounterRng& rng) const {
    const bool target = rng.uniform() >= 0.5;
    const double x = (target ? pair.mean1 : pair.mean0) + pair.sigma() * rng.normal();
    return (x >= threshold) != target;
  }
};

struct MajorityVoteModel {
  double p = 0.5;
  long long shots = 1;
  double exact = 0.5;

  explicit MajorityVoteModel(const ChannelParams& params)
      : p(cs_single_shot_error(params.kappa)), shots(params.shots), exact(majority_vote_exact(p, params.shots)) {}

  bool trial_error(CounterRng& rng) const {
    const bool target = rng.uniform() >= 0.5;
    long long votes_for_target = 0;
    for (long long k = 0; k < shots; ++k) {
      const bool wrong = rng.uniform() < p;
      votes_for_target += (wrong != target) ? 1 : 0;
    }
    const bool decide_target = 2 * votes_for_target > shots;
    return decide_target != target;
  }
};

using Model = std::variant<PhotonCountingModel, HomodyneModel, MajorityVoteModel>;

Model make_model(Scenario scenario, const ChannelParams& params) {
  params.validate();
  switch (scenario) {
    case Scenario::PhotonCounting:
      return PhotonCountingModel(params);
    case Scenario::Homodyne:
      return HomodyneModel(params);
    case Scenario::MajorityVote:
      return MajorityVoteModel(params);
  }
  throw std::invalid_argument("unknown scenario");
}

}  // namespace

double exact_error(Scenario scenario, const ChannelParams& params) {
  return std::visit([](const auto& m) { return m.exact; }, make_model(scenario, params));
}

TrialStats monte_carlo(Scenario scenario, const ChannelParams& params, std::uint64_t trials, std::uint64_t seed,
                       unsigned workers) {
  if (trials < kMinMonteCarloTrials) throw std::invalid_argument("monte_carlo: trials must be >= 10^4");
  const Model model = make_model(scenario, params);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));
  std::vector<std::uint64_t> errors(workers, 0);
  auto run_chunk = [&](unsigned w) {
    const std::uint64_t begin = trials * w / workers, end = trials * (w + 1) / workers;
    std::uint64_t count = 0;
    std::visit(
        [&](const auto& m) {
          for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, i);
            count += m.trial_error(rng) ? 1 : 0;
          }
        },
        model);
    errors[w] = count;
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run_chunk, w);
    run_chunk(0);
  }

  TrialStats stats;
  stats.trials = trials;
  for (auto e : errors) stats.errors += e;
  stats.error_rate = static_cast<double>(stats.errors) / static_cast<double>(trials);
  stats.ci_halfwidth_3sigma = 3.0 * std::sqrt(stats.error_rate * (1.0 - stats.error_rate) / static_cast<double>(trials));
  stats.seed = seed;
  return stats;
}

bool within_ci(const TrialStats& stats, double exact) {
  return std::abs(stats.error_rate - exact) <= stats.ci_halfwidth_3sigma;
}

}  // namespace qillum
