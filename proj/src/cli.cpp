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

#include "qillum/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qillum/bounds.hpp"
#include "qillum/chernoff.hpp"
#include "qillum/fock.hpp"
#include "qillum/receivers.hpp"
#include "qillum/records.hpp"

namespace qillum {

namespace {

struct Options {
  ChannelParams params;
  double margin_factor = 10.0;
  int trunc_dim = 0;
  std::string format;
  std::string out_path;
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000000;
  unsigned workers = 0;
  double tolerance = 0.02;
  std::string scenario;
  std::string axis;
  std::vector<double> values;
  double start = 0.0, stop = 0.0;
  int count = 0;
  std::string spacing = "linear";
};

void add_common(CLI::App& cmd, Options& o, bool require_kappa) {
  auto* kappa = cmd.add_option("--kappa", o.params.kappa, "transmitter-to-receiver coupling, (0, 1]");
  if (require_kappa) kappa->required();
  cmd.add_option("--nb", o.params.n_b, "background photons per mode")->capture_default_str();
  cmd.add_option("--modes", o.params.modes, "entangled temporal modes M")->capture_default_str();
  cmd.add_option("--shots", o.params.shots, "repeated transmissions N")->capture_default_str();
  cmd.add_option("--margin-factor", o.margin_factor, "x << y means x * factor <= y")->capture_default_str();
  cmd.add_option("--trunc-dim", o.trunc_dim, "Fock truncation dimension (0: adaptive)")->capture_default_str();
  cmd.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--out", o.out_path, "output file (default: stdout)");
  cmd.add_option("--seed", o.seed, "Monte Carlo seed")->capture_default_str();
  cmd.add_option("--trials", o.trials, "Monte Carlo trials")->capture_default_str();
}

std::string short_number(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file: " + o.out_path);
  f << text;
  if (!f.flush()) throw std::runtime_error("cannot write output file: " + o.out_path);
}

std::string describe_bound(const BoundResult& b) {
  return "exponent=" + short_number(b.exponent_per_shot) + " bound=" + short_number(b.bound);
}

std::string describe_regime_bound(const auto& compute) {
  try {
    const BoundResult b = compute();
    return "regime=" + std::string(to_string(b.regime->label)) + " " + describe_bound(b);
  } catch (const RegimeNotApplicable& e) {
    const std::string label(to_string(e.regime().label));
    return "regime=" + label + " exponent=n/a (" + label + ")";
  }
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const MarginPolicy margin{o.margin_factor};
  margin.validate();
  o.params.validate();
  if (o.format == "csv" || o.format == "json") {
    const std::vector<RunRecord> rec{make_run_record(o.params, margin)};
    write_output(o, o.format == "csv" ? render_csv(rec) : render_json(rec), out);
    return kExitSuccess;
  }
  const auto& p = o.params;
  const double single_shot = cs_single_shot_error(p.kappa);
  std::ostringstream s;
  s << "kappa=" << short_number(p.kappa) << " n_b=" << short_number(p.n_b) << " modes=" << p.modes
    << " shots=" << p.shots << " margin-factor=" << short_number(margin.factor) << '\n';
  s << "qi             " << describe_regime_bound([&] { return qi_bound(p, margin); }) << '\n';
  s << "sp             " << describe_regime_bound([&] { return sp_bound(p, margin); }) << '\n';
  s << "cs             " << describe_bound(cs_bound(p)) << '\n';
  s << "homodyne       " << describe_bound(homodyne_bound(p)) << '\n';
  s << "majority-vote  " << describe_bound(majority_vote_bound(single_shot, p.shots))
    << " single-shot-error=" << short_number(single_shot)
    << " small-kappa-approx=" << short_number(cs_single_shot_error_approx(p.kappa)) << '\n';
  write_output(o, s.str(), out);
  return kExitSuccess;
}

struct VerifyCheck {
  std::string name;
  double closed_form;
  double oracle;
  double delta;
  double tolerance;
  bool pass;
};

int cmd_verify(const Options& o, std::ostream& out) {
  const auto& p = o.params;
  p.validate();
  if (!(o.tolerance > 0.0)) throw std::invalid_argument("--tolerance must be > 0");
  const int dim = o.trunc_dim > 0 ? o.trunc_dim : adaptive_dim(p.kappa, p.n_b);
  const TruncationConfig trunc{dim};
  const std::complex<double> alpha(std::sqrt(p.kappa), 0.0);

  const auto rho0 = thermal_state<double>(p.n_b, trunc);
  const auto rho1 = displaced_thermal_state<double>(alpha, p.n_b, trunc);
  const ChernoffResult quantum = quantum_chernoff(rho0, rho1);
  const double cs = cs_bound(p).exponent_per_shot;

  std::vector<VerifyCheck> checks;
  const double rel = std::abs(quantum.exponent - cs) / cs;
  checks.push_back({"cs-exponent-vs-quantum-chernoff", cs, quantum.exponent, rel, o.tolerance, rel <= o.tolerance});

  const auto vacuum = number_state<double>(0, trunc).density();
  const auto coherent = coherent_state<double>(alpha, trunc).density();
  const double helstrom = helstrom_error(vacuum, coherent);
  const double single_shot = cs_single_shot_error(p.kappa);
  const double hd = std::abs(helstrom - single_shot);
  checks.push_back({"single-shot-error-vs-helstrom", single_shot, helstrom, hd, 1e-10, hd <= 1e-10});

  const auto [g0, g1] = homodyne_distributions(homodyne_statistics(p, 1.0, false));
  const double hom_oracle = classical_chernoff(g0, g1).exponent;
  const double hom = homodyne_bound(p).exponent_per_shot;
  const double gd = std::abs(hom_oracle - hom);
  checks.push_back({"homodyne-exponent-vs-gaussian-chernoff", hom, hom_oracle, gd, 1e-9, gd <= 1e-9});

  const double helstrom_pair = helstrom_error(rho0, rho1);
  const double excess = helstrom_pair - quantum.q / 2.0;
  checks.push_back({"helstrom-below-chernoff", quantum.q / 2.0, helstrom_pair, excess, 1e-9, excess <= 1e-9});

  const double counting =
      classical_chernoff(photon_number_distribution(rho0), photon_number_distribution(rho1)).exponent;
  const double gain = counting - quantum.exponent;
  checks.push_back({"counting-exponent-below-quantum", quantum.exponent, counting, gain, 1e-9, gain <= 1e-9});

  bool all = true;
  std::ostringstream s;
  s << "verify kappa=" << short_number(p.kappa) << " n_b=" << short_number(p.n_b) << " trunc-dim=" << dim << '\n';
  s << std::left << std::setw(40) << "check" << std::setw(26) << "closed-form/limit" << std::setw(26) << "oracle"
    << std::setw(14) << "delta" << std::setw(10) << "tol" << "result\n";
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    s << std::left << std::setw(40) << c.name << std::setw(26) << format_number(c.closed_form) << std::setw(26)
      << format_number(c.oracle) << std::setw(14) << short_number(c.delta) << std::setw(10)
      << short_number(c.tolerance) << (c.pass ? "PASS" : "FAIL") << '\n';
    report.push_back({{"check", c.name},
                      {"closed_form", c.closed_form},
                      {"oracle", c.oracle},
                      {"delta", c.delta},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  out << s.str();
  if (!o.out_path.empty()) write_output(o, report.dump(2) + '\n', out);
  return all ? kExitSuccess : kExitVerificationFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const MarginPolicy margin{o.margin_factor};
  margin.validate();
  const SweepAxis axis = sweep_axis_from_string(o.axis);
  SweepSpec spec;
  if (!o.values.empty()) {
    spec = SweepSpec{axis, o.values, o.params};
    spec.validate();
  } else {
    if (o.count < 1) throw std::invalid_argument("sweep needs --values or --start/--stop/--count");
    spec = SweepSpec::from_range(axis, o.start, o.stop, o.count, spacing_from_string(o.spacing), o.params);
  }
  const auto records = run_sweep(spec, margin);
  write_output(o, o.format == "json" ? render_json(records) : render_csv(records), out);
  return kExitSuccess;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Scenario scenario = scenario_from_string(o.scenario);
  const auto& p = o.params;
  p.validate();
  const TrialStats stats = monte_carlo(scenario, p, o.trials, o.seed, o.workers);
  const double exact = exact_error(scenario, p);
  const bool pass = within_ci(stats, exact);

  std::string text;
  if (o.format == "csv") {
    text = "scenario,kappa,n_b,modes,shots,trials,errors,error_rate,ci_halfwidth_3sigma,seed,exact,pass\n";
    text += std::string(to_string(scenario)) + ',' + format_number(p.kappa) + ',' + format_number(p.n_b) + ',' +
            std::to_string(p.modes) + ',' + std::to_string(p.shots) + ',' + std::to_string(stats.trials) + ',' +
            std::to_string(stats.errors) + ',' + format_number(stats.error_rate) + ',' +
            format_number(stats.ci_halfwidth_3sigma) + ',' + std::to_string(stats.seed) + ',' +
            format_number(exact) + ',' + (pass ? "pass" : "fail") + '\n';
  } else {
    nlohmann::ordered_json j;
    j["scenario"] = std::string(to_string(scenario));
    j["kappa"] = p.kappa;
    j["n_b"] = p.n_b;
    j["modes"] = p.modes;
    j["shots"] = p.shots;
    j["trials"] = stats.trials;
    j["errors"] = stats.errors;
    j["error_rate"] = stats.error_rate;
    j["ci_halfwidth_3sigma"] = stats.ci_halfwidth_3sigma;
    j["seed"] = stats.seed;
    j["exact"] = exact;
    j["pass"] = pass;
    text = j.dump(2) + '\n';
  }
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_output(o, text, out);
    out << to_string(scenario) << ": error_rate=" << short_number(stats.error_rate) << " +/- "
        << short_number(stats.ci_halfwidth_3sigma) << " exact=" << short_number(exact) << ' '
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitSuccess : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Target-detection error bounds: closed forms, numerical oracles and receiver simulation", "qillum"};
  app.require_subcommand(1);
  Options o;

  auto* bounds = app.add_subcommand("bounds", "evaluate every bound at one parameter point");
  add_common(*bounds, o, true);

  auto* verify = app.add_subcommand("verify", "cross-check closed forms against numerical oracles");
  add_common(*verify, o, true);
  verify->add_option("--tolerance", o.tolerance, "relative tolerance for the coherent-state exponent check")
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "tabulate exponents along one parameter axis");
  add_common(*sweep, o, false);
  sweep->add_option("--axis", o.axis, "swept field")->required()->check(
      CLI::IsMember({"kappa", "n_b", "nb", "modes", "shots"}));
  sweep->add_option("--values", o.values, "explicit values")->delimiter(',');
  sweep->add_option("--start", o.start, "range start");
  sweep->add_option("--stop", o.stop, "range stop");
  sweep->add_option("--count", o.count, "number of points");
  sweep->add_option("--spacing", o.spacing, "linear or log")->check(CLI::IsMember({"linear", "log"}));

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo receiver simulation against its exact error");
  add_common(*simulate, o, true);
  simulate->add_option("--scenario", o.scenario, "receiver")->required()->check(
      CLI::IsMember({"photon-counting", "homodyne", "majority-vote"}));
  simulate->add_option("--workers", o.workers, "threads (0: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*simulate) return cmd_simulate(o, out);
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << "; rerun with --trunc-dim " << e.suggested_dim() << " or larger\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qillum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qillum
