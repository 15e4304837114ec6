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

#ifndef QILLUM_BOUNDS_HPP
#define QILLUM_BOUNDS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qillum {

/// Physical target-detection scenario.
struct ChannelParams {
  double kappa = 0.01;    ///< transmitter-to-receiver coupling, (0, 1]
  double n_b = 0.0;       ///< background photons per mode
  long long modes = 1;    ///< entangled temporal modes M
  long long shots = 1;    ///< repeated transmissions N

  void validate() const;
};

/// "x << y" holds when x * factor <= y.
struct MarginPolicy {
  double factor = 10.0;

  void validate() const {
    if (!(factor >= 2.0)) throw std::invalid_argument("MarginPolicy: factor must be >= 2");
  }
};

enum class System { QuantumIllumination, SinglePhoton };

enum class RegimeLabel { Good, Bad, OutsideModel, Ambiguous };

std::string_view to_string(RegimeLabel label);
RegimeLabel regime_label_from_string(std::string_view s);

/// One asymptotic inequality "lhs << rhs" evaluated at the margin.
struct RegimeCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 10.0;
  bool satisfied = false;
};

struct Regime {
  RegimeLabel label = RegimeLabel::Ambiguous;
  std::vector<RegimeCheck> checks;
};

enum class FormulaId { QiGood, QiBad, SpGood, SpBad, CoherentState, MajorityVote, Homodyne };

std::string_view to_string(FormulaId id);

struct BoundResult {
  double exponent_per_shot = 0.0;
  double bound = 0.5;
  /// Absent for formulas that carry no validity conditions.
  std::optional<Regime> regime;
  FormulaId formula = FormulaId::CoherentState;
};

/// Thrown by qi_bound/sp_bound when the scenario is ambiguous or outside
/// the single-photon model.
class RegimeNotApplicable : public std::domain_error {
 public:
  explicit RegimeNotApplicable(Regime regime);
  const Regime& regime() const noexcept { return regime_; }

 private:
  Regime regime_;
};

Regime classify_regime(const ChannelParams& params, System system, const MarginPolicy& margin = {});

/// Entangled single-photon transmitter: exponent kappa (good) or
/// kappa^2 M / (8 N_B) (bad).
BoundResult qi_bound(const ChannelParams& params, const MarginPolicy& margin = {});

/// Unentangled single-photon transmitter: exponent kappa (good) or
/// kappa^2 / (8 N_B) (bad).
BoundResult sp_bound(const ChannelParams& params, const MarginPolicy& margin = {});

/// Coherent-state transmitter with the optimum quantum receiver:
/// kappa (sqrt(N_B + 1) - sqrt(N_B))^2, valid for any kappa.
BoundResult cs_bound(const ChannelParams& params);

/// Coherent-state transmitter with homodyne detection: kappa / (4 N_B + 2).
BoundResult homodyne_bound(const ChannelParams& params);

/// Chernoff bound on majority-vote fusion of n_shots independent decisions
/// each wrong with probability p: [2 sqrt(p (1 - p))]^N / 2.
BoundResult majority_vote_bound(double p, long long n_shots);

/// Background-free optimum single-shot error (1 - sqrt(1 - e^-kappa)) / 2.
double cs_single_shot_error(double kappa);

/// Small-kappa form (1 - sqrt(kappa)) / 2, for comparison output only.
double cs_single_shot_error_approx(double kappa);

}  // namespace qillum

#endif  // QILLUM_BOUNDS_HPP
