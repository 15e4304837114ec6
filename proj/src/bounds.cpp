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

#include "qillum/bounds.hpp"

#include <cmath>
#include <utility>

#include "qillum/chernoff.hpp"

namespace qillum {

void ChannelParams::validate() const {
  if (!(kappa > 0.0 && kappa <= 1.0)) throw std::invalid_argument("ChannelParams: kappa must lie in (0, 1]");
  if (!(n_b >= 0.0) || !std::isfinite(n_b)) throw std::invalid_argument("ChannelParams: n_b must be finite and >= 0");
  if (modes < 1) throw std::invalid_argument("ChannelParams: modes must be >= 1");
  if (shots < 1) throw std::invalid_argument("ChannelParams: shots must be >= 1");
}

std::string_view to_string(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::Good:
      return "good";
    case RegimeLabel::Bad:
      return "bad";
    case RegimeLabel::OutsideModel:
      return "outside-model";
    case RegimeLabel::Ambiguous:
      return "ambiguous";
  }
  return "ambiguous";
}

RegimeLabel regime_label_from_string(std::string_view s) {
  if (s == "good") return RegimeLabel::Good;
  if (s == "bad") return RegimeLabel::Bad;
  if (s == "outside-model") return RegimeLabel::OutsideModel;
  if (s == "ambiguous") return RegimeLabel::Ambiguous;
  throw std::invalid_argument("unknown regime label: " + std::string(s));
}

std::string_view to_string(FormulaId id) {
  switch (id) {
    case FormulaId::QiGood:
      return "qi-good";
    case FormulaId::QiBad:
      return "qi-bad";
    case FormulaId::SpGood:
      return "sp-good";
    case FormulaId::SpBad:
      return "sp-bad";
    case FormulaId::CoherentState:
      return "coherent-state";
    case FormulaId::MajorityVote:
      return "majority-vote";
    case FormulaId::Homodyne:
      return "homodyne";
  }
  return "unknown";
}

RegimeNotApplicable::RegimeNotApplicable(Regime regime)
    : std::domain_error("bound not applicable: regime is " + std::string(to_string(regime.label))),
      regime_(std::move(regime)) {}

namespace {

RegimeCheck much_less(std::string name, double lhs, double rhs, double factor) {
  return RegimeCheck{std::move(name), lhs, rhs, factor, lhs * factor <= rhs};
}

double bad_regime_exponent(double kappa, double n_b) { return kappa * kappa / (8.0 * n_b); }

BoundResult make_bound(double exponent, long long shots, std::optional<Regime> regime, FormulaId id) {
  return BoundResult{exponent, bound_from_exponent(exponent, shots), std::move(regime), id};
}

}  // namespace

Regime classify_regime(const ChannelParams& params, System system, const MarginPolicy& margin) {
  params.validate();
  margin.validate();
  const double f = margin.factor;
  const double m = static_cast<double>(params.modes);
  // The only place QI and SP differ: the effective background per mode.
  const double background = system == System::QuantumIllumination ? params.n_b / m : params.n_b;
  const char* background_name = system == System::QuantumIllumination ? "N_B/M" : "N_B";

  Regime r;
  r.checks.push_back(much_less("kappa << 1", params.kappa, 1.0, f));
  r.checks.push_back(much_less("M*N_B << 1", m * params.n_b, 1.0, f));
  r.checks.push_back(much_less(std::string(background_name) + " << kappa", background, params.kappa, f));
  r.checks.push_back(much_less(std::string("kappa << ") + background_name, params.kappa, background, f));

  const bool in_model = r.checks[0].satisfied && r.checks[1].satisfied;
  if (!in_model) {
    r.label = RegimeLabel::OutsideModel;
  } else if (r.checks[2].satisfied) {
    r.label = RegimeLabel::Good;
  } else if (r.checks[3].satisfied) {
    r.label = RegimeLabel::Bad;
  } else {
    r.label = RegimeLabel::Ambiguous;
  }
  return r;
}

BoundResult qi_bound(const ChannelParams& params, const MarginPolicy& margin) {
  Regime regime = classify_regime(params, System::QuantumIllumination, margin);
  switch (regime.label) {
    case RegimeLabel::Good:
      return make_bound(params.kappa, params.shots, std::move(regime), FormulaId::QiGood);
    case RegimeLabel::Bad: {
      // Bit-for-bit M times the single-photon bad-regime exponent.
      const double e = static_cast<double>(params.modes) * bad_regime_exponent(params.kappa, params.n_b);
      return make_bound(e, params.shots, std::move(regime), FormulaId::QiBad);
    }
    default:
      throw RegimeNotApplicable(std::move(regime));
  }
}

BoundResult sp_bound(const ChannelParams& params, const MarginPolicy& margin) {
  Regime regime = classify_regime(params, System::SinglePhoton, margin);
  switch (regime.label) {
    case RegimeLabel::Good:
      return make_bound(params.kappa, params.shots, std::move(regime), FormulaId::SpGood);
    case RegimeLabel::Bad:
      return make_bound(bad_regime_exponent(params.kappa, params.n_b), params.shots, std::move(regime),
                        FormulaId::SpBad);
    default:
      throw RegimeNotApplicable(std::move(regime));
  }
}

BoundResult cs_bound(const ChannelParams& params) {
  params.validate();
  // (sqrt(N+1) - sqrt(N))^2 == 1 / (sqrt(N+1) + sqrt(N))^2, without cancellation.
  const double sum = std::sqrt(params.n_b + 1.0) + std::sqrt(params.n_b);
  return make_bound(params.kappa / (sum * sum), params.shots, std::nullopt, FormulaId::CoherentState);
}

BoundResult homodyne_bound(const ChannelParams& params) {
  params.validate();
  return make_bound(params.kappa / (4.0 * params.n_b + 2.0), params.shots, std::nullopt, FormulaId::Homodyne);
}

BoundResult majority_vote_bound(double p, long long n_shots) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("majority_vote_bound: p must lie in (0, 1)");
  if (n_shots < 1) throw std::invalid_argument("majority_vote_bound: n_shots must be >= 1");
  // -ln(2 sqrt(p(1-p))) = -ln(1 - (1-2p)^2) / 2
  const double d = 1.0 - 2.0 * p;
  const double exponent = -0.5 * std::log1p(-d * d);
  return make_bound(exponent, n_shots, std::nullopt, FormulaId::MajorityVote);
}

double cs_single_shot_error(double kappa) {
  if (!(kappa > 0.0 && kappa <= 1.0)) throw std::invalid_argument("cs_single_shot_error: kappa must lie in (0, 1]");
  return 0.5 * (1.0 - std::sqrt(-std::expm1(-kappa)));
}

double cs_single_shot_error_approx(double kappa) {
  if (!(kappa > 0.0 && kappa <= 1.0)) {
    throw std::invalid_argument("cs_single_shot_error_approx: kappa must lie in (0, 1]");
  }
  return 0.5 * (1.0 - std::sqrt(kappa));
}

}  // namespace qillum
