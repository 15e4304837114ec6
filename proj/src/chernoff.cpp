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

#include "qillum/chernoff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qillum {

namespace {

double checked(double v) {
  if (!std::isfinite(v)) {
    throw std::runtime_error("Chernoff objective is not finite (truncation failure upstream?)");
  }
  return v;
}

}  // namespace

UnitIntervalMinimum minimize_on_unit_interval(const std::function<double(double)>& f) {
  constexpr int n = kChernoffGridPoints;
  constexpr double step = 1.0 / (n - 1);
  std::array<double, n> values{};
  int best = 0;
  for (int k = 0; k < n; ++k) {
    values[k] = checked(f(k * step));
    if (values[k] < values[best]) best = k;
  }
  UnitIntervalMinimum result{best * step, values[best], n};

  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  if (*hi_it - *lo_it <= kFlatObjectiveTol) {
    result.s = 0.5;
    result.value = values[(n - 1) / 2];
    return result;
  }

  // Golden-section on the two cells around the best grid point.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, (best - 1) * step);
  double hi = std::min(1.0, (best + 1) * step);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = checked(f(x1));
  double f2 = checked(f(x2));
  result.evaluations += 2;
  while (hi - lo > kChernoffSTol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = checked(f(x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = checked(f(x2));
    }
    ++result.evaluations;
  }
  const double s = 0.5 * (lo + hi);
  const double v = checked(f(s));
  ++result.evaluations;
  if (v < result.value) {
    result.s = s;
    result.value = v;
  }
  return result;
}

ChernoffResult to_chernoff_result(const UnitIntervalMinimum& m) {
  ChernoffResult r;
  // Rounding can push the minimum of a fully overlapping pair a hair above 1.
  r.q = std::clamp(m.value, 0.0, 1.0);
  r.s_star = m.s;
  r.exponent = r.q > 0.0 ? -std::log(r.q) : std::numeric_limits<double>::infinity();
  r.evaluations = m.evaluations;
  return r;
}

double bound_from_exponent(double exponent, long long n_shots) {
  if (!std::isfinite(exponent) && exponent != std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("bound_from_exponent: exponent must be finite");
  }
  if (n_shots < 1) throw std::invalid_argument("bound_from_exponent: n_shots must be >= 1");
  return std::clamp(0.5 * std::exp(-static_cast<double>(n_shots) * exponent), 0.0, 0.5);
}

double classical_chernoff_objective(const DiscreteDistribution& p0, const DiscreteDistribution& p1, double s) {
  double sum = 0.0;
  for (std::size_t x = 0; x < p0.size(); ++x) {
    const double a = p0[x], b = p1[x];
    if (a > 0.0 && b > 0.0) sum += std::pow(a, s) * std::pow(b, 1.0 - s);
  }
  return sum;
}

ChernoffResult classical_chernoff(const DiscreteDistribution& p0, const DiscreteDistribution& p1) {
  if (!p0.same_support(p1)) throw DimensionMismatch("classical_chernoff: distributions have different supports");
  return to_chernoff_result(
      minimize_on_unit_interval([&](double s) { return classical_chernoff_objective(p0, p1, s); }));
}

}  // namespace qillum
