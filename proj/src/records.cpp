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

#include "qillum/records.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "qillum/receivers.hpp"

namespace qillum {

namespace {

std::string status_of(const std::optional<double>& exponent, RegimeLabel label) {
  return exponent ? std::string("ok") : std::string(to_string(label));
}

bool same_optional(const std::optional<double>& a, const std::optional<double>& b) {
  return a.has_value() == b.has_value() && (!a || *a == *b);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("parse_csv: bad number '" + std::string(s) + "'");
  }
  return v;
}

long long parse_integer(std::string_view s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("parse_csv: bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::optional<double> parse_optional(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

std::optional<double> exponent_or_empty(const auto& compute) {
  try {
    return compute().exponent_per_shot;
  } catch (const RegimeNotApplicable&) {
    return std::nullopt;
  }
}

}  // namespace

std::string RunRecord::qi_status() const { return status_of(qi_exponent, qi_regime); }
std::string RunRecord::sp_status() const { return status_of(sp_exponent, sp_regime); }

bool RunRecord::operator==(const RunRecord& o) const {
  return params.kappa == o.params.kappa && params.n_b == o.params.n_b && params.modes == o.params.modes &&
         params.shots == o.params.shots && same_optional(qi_exponent, o.qi_exponent) &&
         same_optional(sp_exponent, o.sp_exponent) && cs_exponent == o.cs_exponent &&
         hom_exponent == o.hom_exponent && mv_exponent == o.mv_exponent && qi_regime == o.qi_regime &&
         sp_regime == o.sp_regime;
}

RunRecord make_run_record(const ChannelParams& params, const MarginPolicy& margin) {
  params.validate();
  RunRecord r;
  r.params = params;
  r.qi_regime = classify_regime(params, System::QuantumIllumination, margin).label;
  r.sp_regime = classify_regime(params, System::SinglePhoton, margin).label;
  r.qi_exponent = exponent_or_empty([&] { return qi_bound(params, margin); });
  r.sp_exponent = exponent_or_empty([&] { return sp_bound(params, margin); });
  r.cs_exponent = cs_bound(params).exponent_per_shot;
  r.hom_exponent = homodyne_bound(params).exponent_per_shot;
  r.mv_exponent = majority_vote_bound(cs_single_shot_error(params.kappa), params.shots).exponent_per_shot;
  return r;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_csv(std::span<const RunRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& r : records) {
    out += format_number(r.params.kappa) + ',' + format_number(r.params.n_b) + ',' + std::to_string(r.params.modes) +
           ',' + std::to_string(r.params.shots) + ',' + opt(r.qi_exponent) + ',' + r.qi_status() + ',' +
           opt(r.sp_exponent) + ',' + r.sp_status() + ',' + format_number(r.cs_exponent) + ',' +
           format_number(r.hom_exponent) + ',' + format_number(r.mv_exponent) + ',' +
           std::string(to_string(r.qi_regime)) + ',' + std::string(to_string(r.sp_regime)) + '\n';
  }
  return out;
}

std::vector<RunRecord> parse_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) throw std::invalid_argument("parse_csv: missing or wrong header");

  std::vector<RunRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != 13) throw std::invalid_argument("parse_csv: row " + std::to_string(i) + " has wrong width");
    RunRecord r;
    r.params.kappa = parse_double(cells[0]);
    r.params.n_b = parse_double(cells[1]);
    r.params.modes = parse_integer(cells[2]);
    r.params.shots = parse_integer(cells[3]);
    r.qi_exponent = parse_optional(cells[4]);
    r.sp_exponent = parse_optional(cells[6]);
    r.cs_exponent = parse_double(cells[8]);
    r.hom_exponent = parse_double(cells[9]);
    r.mv_exponent = parse_double(cells[10]);
    r.qi_regime = regime_label_from_string(cells[11]);
    r.sp_regime = regime_label_from_string(cells[12]);
    if (r.qi_status() != cells[5] || r.sp_status() != cells[7]) {
      throw std::invalid_argument("parse_csv: row " + std::to_string(i) + " status disagrees with regime");
    }
    out.push_back(r);
  }
  return out;
}

std::string render_json(std::span<const RunRecord> records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["kappa"] = r.params.kappa;
    j["n_b"] = r.params.n_b;
    j["modes"] = r.params.modes;
    j["shots"] = r.params.shots;
    j["qi_exponent"] = opt(r.qi_exponent);
    j["qi_status"] = r.qi_status();
    j["sp_exponent"] = opt(r.sp_exponent);
    j["sp_status"] = r.sp_status();
    j["cs_exponent"] = r.cs_exponent;
    j["hom_exponent"] = r.hom_exponent;
    j["mv_exponent"] = r.mv_exponent;
    j["qi_regime"] = std::string(to_string(r.qi_regime));
    j["sp_regime"] = std::string(to_string(r.sp_regime));
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + '\n';
}

SweepAxis sweep_axis_from_string(std::string_view s) {
  if (s == "kappa") return SweepAxis::Kappa;
  if (s == "n_b" || s == "nb") return SweepAxis::NB;
  if (s == "modes") return SweepAxis::Modes;
  if (s == "shots") return SweepAxis::Shots;
  throw std::invalid_argument("unknown sweep axis: " + std::string(s));
}

Spacing spacing_from_string(std::string_view s) {
  if (s == "linear") return Spacing::Linear;
  if (s == "log") return Spacing::Log;
  throw std::invalid_argument("unknown spacing: " + std::string(s));
}

SweepSpec SweepSpec::from_range(SweepAxis axis, double start, double stop, int count, Spacing spacing,
                                const ChannelParams& fixed) {
  if (count < 1) throw std::invalid_argument("SweepSpec: count must be >= 1");
  if (spacing == Spacing::Log && !(start > 0.0 && stop > 0.0)) {
    throw std::invalid_argument("SweepSpec: log spacing requires positive endpoints");
  }
  SweepSpec spec{axis, {}, fixed};
  const bool integral = axis == SweepAxis::Modes || axis == SweepAxis::Shots;
  for (int i = 0; i < count; ++i) {
    double v = start;
    if (count > 1) {
      const double t = static_cast<double>(i) / (count - 1);
      v = spacing == Spacing::Log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                  : start + t * (stop - start);
      if (i == 0) v = start;
      if (i == count - 1) v = stop;
    }
    spec.values.push_back(integral ? std::round(v) : v);
  }
  spec.validate();
  return spec;
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("SweepSpec: no values");
  const bool integral = axis == SweepAxis::Modes || axis == SweepAxis::Shots;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw std::invalid_argument("SweepSpec: non-finite value");
    if (integral && values[i] != std::round(values[i])) {
      throw std::invalid_argument("SweepSpec: modes/shots values must be integers");
    }
  }
  if (values.size() > 1) {
    const bool up = values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (up ? !(values[i] > values[i - 1]) : !(values[i] < values[i - 1])) {
        throw std::invalid_argument("SweepSpec: values must be strictly monotone");
      }
    }
  }
  for (const auto& p : points()) p.validate();
}

std::vector<ChannelParams> SweepSpec::points() const {
  std::vector<ChannelParams> out;
  out.reserve(values.size());
  for (double v : values) {
    ChannelParams p = fixed;
    switch (axis) {
      case SweepAxis::Kappa:
        p.kappa = v;
        break;
      case SweepAxis::NB:
        p.n_b = v;
        break;
      case SweepAxis::Modes:
        p.modes = static_cast<long long>(v);
        break;
      case SweepAxis::Shots:
        p.shots = static_cast<long long>(v);
        break;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec, const MarginPolicy& margin) {
  spec.validate();
  std::vector<RunRecord> out;
  for (const auto& p : spec.points()) out.push_back(make_run_record(p, margin));
  return out;
}

}  // namespace qillum
