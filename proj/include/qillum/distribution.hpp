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

#ifndef QILLUM_DISTRIBUTION_HPP
#define QILLUM_DISTRIBUTION_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qillum {

/// Probability mass function over a finite, ordered set of outcomes.
///
/// Outcomes are labeled by real values: photon counts use 0, 1, ..., n-1,
/// discretized quadratures use their grid abscissae. Total mass must be
/// within 1e-9 of one. A truncated source (a Fock-space photon count) may
/// declare a looser deficit, but never an excess.
class DiscreteDistribution {
 public:
  static constexpr double kMassTolerance = 1e-9;

  DiscreteDistribution(std::vector<double> support, std::vector<double> mass,
                       double mass_tolerance = kMassTolerance)
      : support_(std::move(support)), mass_(std::move(mass)) {
    if (support_.size() != mass_.size() || mass_.empty()) {
      throw std::invalid_argument("DiscreteDistribution: support and mass must be non-empty and equal length");
    }
    for (double m : mass_) {
      if (!(m >= 0.0)) {
        throw std::invalid_argument("DiscreteDistribution: negative or non-finite mass");
      }
    }
    double t = total();
    if (t < 1.0 - mass_tolerance || t > 1.0 + kMassTolerance) {
      throw std::invalid_argument("DiscreteDistribution: total mass " + std::to_string(t) + " is not 1");
    }
  }

  /// Counts 0..mass.size()-1.
  static DiscreteDistribution counts(std::vector<double> mass, double mass_tolerance = kMassTolerance) {
    std::vector<double> support(mass.size());
    std::iota(support.begin(), support.end(), 0.0);
    return DiscreteDistribution(std::move(support), std::move(mass), mass_tolerance);
  }

  std::size_t size() const noexcept { return mass_.size(); }
  const std::vector<double>& support() const noexcept { return support_; }
  const std::vector<double>& mass() const noexcept { return mass_; }
  double operator[](std::size_t i) const { return mass_[i]; }

  double total() const { return std::accumulate(mass_.begin(), mass_.end(), 0.0); }

  double mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < mass_.size(); ++i) m += support_[i] * mass_[i];
    return m;
  }

  bool same_support(const DiscreteDistribution& other) const { return support_ == other.support_; }

 private:
  std::vector<double> support_;
  std::vector<double> mass_;
};

}  // namespace qillum

#endif  // QILLUM_DISTRIBUTION_HPP
