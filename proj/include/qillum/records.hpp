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

#ifndef QILLUM_RECORDS_HPP
#define QILLUM_RECORDS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qillum/bounds.hpp"

namespace qillum {

/// Every transmitter's exponent at one parameter point. qi/sp exponents are
/// absent when their regime is ambiguous or outside the model.
struct RunRecord {
  ChannelParams params;
  std::optional<double> qi_exponent;
  std::optional<double> sp_exponent;
  double cs_exponent = 0.0;
  double hom_exponent = 0.0;
  double mv_exponent = 0.0;
  RegimeLabel qi_regime = RegimeLabel::Ambiguous;
  RegimeLabel sp_regime = RegimeLabel::Ambiguous;

  /// "ok" when the exponent is present, otherwise the regime label.
  std::string qi_status() const;
  std::string sp_status() const;

  bool operator==(const RunRecord& other) const;
};

RunRecord make_run_record(const ChannelParams& params, const MarginPolicy& margin = {});

inline constexpr std::string_view kCsvHeader =
    "kappa,n_b,modes,shots,qi_exponent,qi_status,sp_exponent,sp_status,cs_exponent,hom_exponent,mv_exponent,"
    "qi_regime,sp_regime";

/// %.17g, so every double survives a text round-trip.
std::string format_number(double v);

std::string render_csv(std::span<const RunRecord> records);
std::vector<RunRecord> parse_csv(std::string_view text);
std::string render_json(std::span<const RunRecord> records);

enum class SweepAxis { Kappa, NB, Modes, Shots };
enum class Spacing { Linear, Log };

SweepAxis sweep_axis_from_string(std::string_view s);
Spacing spacing_from_string(std::string_view s);

struct SweepSpec {
  SweepAxis axis = SweepAxis::Kappa;
  std::vector<double> values;
  ChannelParams fixed;

  /// `count` points from start to stop inclusive; endpoints are exact.
  static SweepSpec from_range(SweepAxis axis, double start, double stop, int count, Spacing spacing,
                              const ChannelParams& fixed);

  /// Non-empty, strictly monotone, integral on the modes/shots axes, and
  /// every point a valid ChannelParams.
  void validate() const;
  std::vector<ChannelParams> points() const;
};

/// One record per grid point, in sweep order.
std::vector<RunRecord> run_sweep(const SweepSpec& spec, const MarginPolicy& margin = {});

}  // namespace qillum

#endif  // QILLUM_RECORDS_HPP
