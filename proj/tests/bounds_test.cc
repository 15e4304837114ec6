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
#include <complex>

#include "gtest/gtest.h"

#include "qillum/fock.hpp"

using namespace qillum;

namespace {

ChannelParams params(double kappa, double nb, long long modes = 1, long long shots = 1) {
  return ChannelParams{kappa, nb, modes, shots};
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1)));
  return v;
}

}  // namespace

TEST(ChannelParams, validation) {
  EXPECT_THROW(params(0.0, 0.0).validate(), std::invalid_argument);
  EXPECT_THROW(params(1.5, 0.0).validate(), std::invalid_argument);
  EXPECT_THROW(params(0.1, -1.0).validate(), std::invalid_argument);
  EXPECT_THROW(params(0.1, 0.0, 0).validate(), std::invalid_argument);
  EXPECT_THROW(params(0.1, 0.0, 1, 0).validate(), std::invalid_argument);
  EXPECT_NO_THROW(params(1.0, 0.0).validate());
  EXPECT_THROW(MarginPolicy{1.5}.validate(), std::invalid_argument);
}

TEST(ClassifyRegime, qi_good) {
  const auto r = classify_regime(params(0.01, 1e-5, 100), System::QuantumIllumination);
  EXPECT_EQ(r.label, RegimeLabel::Good);
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_EQ(r.checks[2].name, "N_B/M << kappa");
  EXPECT_NEAR(r.checks[2].lhs, 1e-7, 1e-22);
  EXPECT_TRUE(r.checks[2].satisfied);
  EXPECT_FALSE(r.checks[3].satisfied);
}

TEST(ClassifyRegime, qi_bad) {
  const auto r = classify_regime(params(1e-4, 0.01, 10), System::QuantumIllumination);
  EXPECT_EQ(r.label, RegimeLabel::Bad);
  EXPECT_TRUE(r.checks[3].satisfied);
}

TEST(ClassifyRegime, outside_model) {
  EXPECT_EQ(classify_regime(params(0.5, 1e-6, 10), System::QuantumIllumination).label, RegimeLabel::OutsideModel);
  EXPECT_EQ(classify_regime(params(0.5, 1e-6, 10), System::SinglePhoton).label, RegimeLabel::OutsideModel);
  // M N_B too large.
  EXPECT_EQ(classify_regime(params(0.01, 0.01, 100), System::SinglePhoton).label, RegimeLabel::OutsideModel);
}

TEST(ClassifyRegime, ambiguous_band) {
  // N_B/M = 5e-4: kappa neither >= 10x nor <= 1/10x of it.
  const auto r = classify_regime(params(2e-3, 5e-3, 10), System::QuantumIllumination);
  EXPECT_EQ(r.label, RegimeLabel::Ambiguous);
  EXPECT_THROW(qi_bound(params(2e-3, 5e-3, 10)), RegimeNotApplicable);
}

TEST(ClassifyRegime, margin_factor_changes_label) {
  const auto p = params(6e-3, 1e-3, 2);
  EXPECT_EQ(classify_regime(p, System::QuantumIllumination, {10.0}).label, RegimeLabel::Good);
  EXPECT_EQ(classify_regime(p, System::QuantumIllumination, {20.0}).label, RegimeLabel::Ambiguous);
}

TEST(QiBound, good_branch) {
  const auto b = qi_bound(params(0.01, 1e-5, 100, 10000));
  EXPECT_EQ(b.formula, FormulaId::QiGood);
  EXPECT_EQ(b.exponent_per_shot, 0.01);
  EXPECT_NEAR(b.bound / (std::exp(-100.0) / 2.0), 1.0, 1e-12);
  ASSERT_TRUE(b.regime.has_value());
  EXPECT_EQ(b.regime->label, RegimeLabel::Good);
}

TEST(QiBound, bad_branch) {
  const auto b = qi_bound(params(1e-4, 0.01, 10));
  EXPECT_EQ(b.formula, FormulaId::QiBad);
  EXPECT_NEAR(b.exponent_per_shot, 1.25e-6, 1e-20);
}

TEST(QiBound, outside_model_is_refused) {
  try {
    qi_bound(params(0.5, 1e-6, 10));
    FAIL();
  } catch (const RegimeNotApplicable& e) {
    EXPECT_EQ(e.regime().label, RegimeLabel::OutsideModel);
  }
}

TEST(SpBound, branches) {
  EXPECT_EQ(sp_bound(params(0.01, 1e-5, 100)).exponent_per_shot, 0.01);
  const auto bad = sp_bound(params(1e-4, 0.01, 10));
  EXPECT_EQ(bad.formula, FormulaId::SpBad);
  EXPECT_NEAR(bad.exponent_per_shot, 1.25e-7, 1e-21);
  EXPECT_NEAR(qi_bound(params(1e-4, 0.01, 10)).exponent_per_shot / bad.exponent_per_shot, 10.0, 1e-14);
  EXPECT_THROW(sp_bound(params(0.5, 0.0)), RegimeNotApplicable);
}

TEST(CsBound, closed_form) {
  EXPECT_EQ(cs_bound(params(0.37, 0.0)).exponent_per_shot, 0.37);
  EXPECT_NEAR(cs_bound(params(0.01, 1.0)).exponent_per_shot, 0.0017157287525380991, 1e-18);
  EXPECT_FALSE(cs_bound(params(0.5, 0.3)).regime.has_value());
  const auto b = cs_bound(params(0.02, 0.1, 1, 50));
  EXPECT_NEAR(b.bound, std::exp(-50 * b.exponent_per_shot) / 2, 1e-12);
}

TEST(CsSingleShotError, values) {
  EXPECT_NEAR(cs_single_shot_error(1e-15), 0.5, 1e-7);
  EXPECT_NEAR(cs_single_shot_error(0.01), 0.45012473997353010, 1e-15);
  EXPECT_NEAR(cs_single_shot_error_approx(0.01), 0.45, 1e-15);
  EXPECT_THROW(cs_single_shot_error(0.0), std::invalid_argument);
  EXPECT_THROW(cs_single_shot_error(1.1), std::invalid_argument);
}

TEST(CsSingleShotError, matches_helstrom) {
  const TruncationConfig t{30};
  const auto vac = number_state<double>(0, t).density();
  const auto coh = coherent_state<double>(std::complex<double>(0.2, 0), t).density();
  EXPECT_NEAR(cs_single_shot_error(0.04), helstrom_error(vac, coh), 1e-10);
  EXPECT_NEAR(cs_single_shot_error(0.04), 0.40099171644796988, 1e-15);
}

TEST(MajorityVoteBound, values) {
  const auto half = majority_vote_bound(0.5, 77);
  EXPECT_EQ(half.bound, 0.5);
  EXPECT_EQ(half.exponent_per_shot, 0.0);

  const auto b = majority_vote_bound(0.45, 101);
  EXPECT_NEAR(std::exp(-b.exponent_per_shot), 0.99498743710662001, 1e-15);
  EXPECT_NEAR(b.bound, 0.30098671808756819, 1e-13);

  const double kappa = 1e-4;
  const auto small = majority_vote_bound(cs_single_shot_error_approx(kappa), 1);
  EXPECT_NEAR(small.exponent_per_shot, 5.0002500166679168e-05, 1e-17);
  EXPECT_NEAR(small.exponent_per_shot / (kappa / 2), 1.0, 1e-4);

  EXPECT_THROW(majority_vote_bound(0.0, 3), std::invalid_argument);
  EXPECT_THROW(majority_vote_bound(1.0, 3), std::invalid_argument);
}

TEST(HomodyneBound, values) {
  EXPECT_EQ(homodyne_bound(params(0.3, 0.0)).exponent_per_shot, 0.15);
  EXPECT_NEAR(homodyne_bound(params(0.1, 0.5)).exponent_per_shot, 0.025, 1e-17);
}

TEST(BoundInvariants, sweep_grid) {
  const MarginPolicy margin{};
  int good = 0, bad = 0;
  for (double kappa : log_grid(1e-6, 0.1, 30)) {
    for (double nb : log_grid(1e-8, 0.1, 30)) {
      for (long long m : {1, 10, 100, 1000}) {
        const auto p = params(kappa, nb, m, 1000);
        for (const auto& b : {cs_bound(p), homodyne_bound(p)}) {
          EXPECT_GE(b.exponent_per_shot, 0.0);
          EXPECT_GT(b.bound, 0.0);
          EXPECT_LE(b.bound, 0.5);
          EXPECT_NEAR(b.bound, std::exp(-1000 * b.exponent_per_shot) / 2, 1e-12);
        }
        const auto qi_r = classify_regime(p, System::QuantumIllumination, margin).label;
        const auto sp_r = classify_regime(p, System::SinglePhoton, margin).label;
        if (qi_r == RegimeLabel::Good && sp_r == RegimeLabel::Good) {
          ++good;
          EXPECT_EQ(qi_bound(p).exponent_per_shot, kappa);
          EXPECT_EQ(sp_bound(p).exponent_per_shot, kappa);
        }
        if (qi_r == RegimeLabel::Bad && sp_r == RegimeLabel::Bad) {
          ++bad;
          EXPECT_EQ(qi_bound(p).exponent_per_shot, static_cast<double>(m) * sp_bound(p).exponent_per_shot);
        }
        if (nb <= 1e-3 && (qi_r == RegimeLabel::Good || qi_r == RegimeLabel::Bad)) {
          const double qi = qi_bound(p).exponent_per_shot;
          EXPECT_GE(cs_bound(p).exponent_per_shot, qi * (1 - 2 * std::sqrt(nb)));
          if (qi_r == RegimeLabel::Bad) EXPECT_LE(qi, kappa / (8 * margin.factor));
        }
        if (nb <= 1e-3) {
          const double ratio = cs_bound(p).exponent_per_shot / homodyne_bound(p).exponent_per_shot;
          EXPECT_GE(ratio, 1.9);
          EXPECT_LE(ratio, 2.0);
        }
      }
    }
  }
  EXPECT_GT(good, 0);
  EXPECT_GT(bad, 0);
}

TEST(BoundInvariants, exponents_decrease_with_background) {
  double cs_prev = INFINITY, hom_prev = INFINITY;
  for (double nb : log_grid(1e-8, 10.0, 200)) {
    const auto p = params(0.05, nb);
    EXPECT_LT(cs_bound(p).exponent_per_shot, cs_prev);
    EXPECT_LT(homodyne_bound(p).exponent_per_shot, hom_prev);
    cs_prev = cs_bound(p).exponent_per_shot;
    hom_prev = homodyne_bound(p).exponent_per_shot;
  }
}
