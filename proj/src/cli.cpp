// Copyright 2026 The quditphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quditphase/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "quditphase/verify.hpp"

namespace quditphase {

namespace {

CliConfig::ChannelChoice parse_channel(const std::string& value) {
  if (value == "conventional") return CliConfig::ChannelChoice::conventional;
  if (value == "weyl") return CliConfig::ChannelChoice::weyl;
  if (value == "both") return CliConfig::ChannelChoice::both;
  throw UsageError("--channel: expected conventional, weyl or both (got " +
                   value + ")");
}

void parse_eta_range(const std::string& value, CliConfig& config) {
  double lo = 0.0, hi = 0.0;
  unsigned long steps = 0;
  char trailing = 0;
  if (std::sscanf(value.c_str(), "%lf:%lf:%lu%c", &lo, &hi, &steps,
                  &trailing) != 3)
    throw UsageError("--eta: expected min:max:count (got " + value + ")");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
    throw UsageError("--eta: need 0 <= min <= max <= 1 (got " + value + ")");
  if (steps < 1) throw UsageError("--eta: count must be at least 1");
  config.eta_min = lo;
  config.eta_max = hi;
  config.eta_steps = steps;
}

void check_dims(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw UsageError("--dims: need at least one dimension");
  for (std::size_t d : dims)
    if (d < 2 || d % 4 != 2)
      throw UsageError("--dims: dimension must be 2 or 4k+2 (got " +
                       std::to_string(d) + ")");
}

void parse_quadrature(const std::string& value, CliConfig& config) {
  int polar = 0, azimuthal = 0;
  char trailing = 0;
  if (std::sscanf(value.c_str(), "%d,%d%c", &polar, &azimuthal, &trailing) !=
          2 ||
      polar < 1 || azimuthal < 1)
    throw UsageError("--quadrature: expected two positive orders p,a (got " +
                     value + ")");
  config.quadrature = {polar, azimuthal};
}

}  // namespace

std::vector<ChannelKind> CliConfig::kinds() const {
  switch (channel) {
    case ChannelChoice::conventional:
      return {ChannelKind::conventional};
    case ChannelChoice::weyl:
      return {ChannelKind::weyl};
    case ChannelChoice::both:
      return {ChannelKind::conventional, ChannelKind::weyl};
  }
  return {};
}

CliConfig parse_args(const std::vector<std::string>& args,
                     std::string* help_text) {
  CliConfig config;
  CLI::App app{"Minimal qudit codes for a qubit under phase damping"};
  app.require_subcommand(1);

  std::string channel = "both";
  std::string eta_range;
  std::string quadrature;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Averaged fidelities over an eta grid, emitted as CSV");
  sweep->add_option("--channel", channel,
                    "conventional, weyl or both (default both)");
  sweep->add_option("--dims", config.dims,
                    "comma separated qudit dimensions, each 2 or 4k+2")
      ->delimiter(',');
  sweep->add_option("--eta", eta_range,
                    "eta grid as min:max:count (default 0:1:101)");
  sweep->add_flag("--repetition,!--no-repetition", config.include_repetition,
                  "include repetition-code baseline rows (default on)");
  sweep->add_flag("--damped,!--no-damped", config.include_damped,
                  "include the D=2 damped-baseline rows even when 2 is not "
                  "among --dims (default on)");
  sweep->add_option("--out", config.output_path,
                    "output file, or - for standard output");
  sweep->add_option("--quadrature", quadrature,
                    "quadrature orders p,a (diagnostic; default 8,16)");

  CLI::App* point = app.add_subcommand(
      "point", "Single state-dependent fidelity evaluation");
  point->add_option("--channel", channel,
                    "conventional, weyl or both (default both)");
  point->add_option("--dim", config.point_dim, "qudit dimension, 2 or 4k+2");
  point->add_option("--eta", config.point_eta, "damping strength in [0,1]");
  point->add_option("--theta", config.point_theta, "polar angle in [0, pi]");
  point->add_option("--phi", config.point_phi, "azimuth in [0, 2 pi)");
  point->add_option("--out", config.output_path,
                    "output file, or - for standard output");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the module verification suites");
  verify->add_option("--suite", config.suites,
                     "suite name (repeatable); default: all suites");
  verify->add_option("--quadrature", quadrature,
                     "quadrature orders p,a for the fidelity suite "
                     "(default 8,16)");

  std::vector<std::string> argv(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    if (help_text) {
      std::ostringstream help;
      help << app.help();
      *help_text = help.str();
      return config;
    }
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (sweep->parsed()) {
    config.command = CliConfig::Command::sweep;
    config.channel = parse_channel(channel);
    check_dims(config.dims);
    if (!eta_range.empty()) parse_eta_range(eta_range, config);
    if (!quadrature.empty()) parse_quadrature(quadrature, config);
  } else if (point->parsed()) {
    config.command = CliConfig::Command::point;
    config.channel = parse_channel(channel);
    if (config.point_dim < 2 || config.point_dim % 4 != 2)
      throw UsageError("--dim: dimension must be 2 or 4k+2 (got " +
                       std::to_string(config.point_dim) + ")");
    if (!(config.point_eta >= 0.0 && config.point_eta <= 1.0))
      throw UsageError("--eta: damping strength must lie in [0, 1]");
    try {
      BlochAngles angles(config.point_theta, config.point_phi);
    } catch (const std::domain_error& e) {
      throw UsageError(std::string("--theta/--phi: ") + e.what());
    }
  } else {
    config.command = CliConfig::Command::verify;
    if (!quadrature.empty()) parse_quadrature(quadrature, config);
    for (const auto& name : config.suites) {
      const auto& known = verification_suite_names();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw UsageError("--suite: unknown suite " + name);
    }
  }
  return config;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void emit_csv(std::span<const SweepRecord> records, std::ostream& out) {
  std::vector<const SweepRecord*> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRecord* a, const SweepRecord* b) {
                     return std::tuple(to_string(a->kind), a->code, a->eta) <
                            std::tuple(to_string(b->kind), b->code, b->eta);
                   });
  out << "channel,code,eta,f_damp,f_rec\n";
  for (const SweepRecord* r : rows)
    out << to_string(r->kind) << ',' << r->code << ',' << format_real(r->eta)
        << ',' << format_real(r->f_damp) << ',' << format_real(r->f_rec)
        << '\n';
}

int emit_records(std::span<const SweepRecord> records,
                 const std::string& path, std::ostream& out,
                 std::ostream& err) {
  if (records.empty()) {
    err << "nothing to emit\n";
    return kExitEmpty;
  }
  if (path == "-") {
    emit_csv(records, out);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open output file: " << path << "\n";
    return kExitIo;
  }
  emit_csv(records, file);
  file.flush();
  if (!file) {
    err << "failed writing output file: " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

namespace {

int run_sweep_command(const CliConfig& config, std::ostream& out,
                      std::ostream& err) {
  SweepConfig sweep;
  sweep.kinds = config.kinds();
  sweep.dims = config.dims;
  if (config.include_damped &&
      std::find(sweep.dims.begin(), sweep.dims.end(), 2u) == sweep.dims.end())
    sweep.dims.insert(sweep.dims.begin(), 2u);
  sweep.etas = eta_grid(config.eta_min, config.eta_max, config.eta_steps);
  sweep.include_repetition = config.include_repetition;
  const auto records = run_sweep(sweep);
  return emit_records(records, config.output_path, out, err);
}

int run_point_command(const CliConfig& config, std::ostream& out,
                      std::ostream& err) {
  std::ostringstream body;
  body << "channel,code,eta,theta,phi,f_damp,f_rec\n";
  const std::size_t k = (config.point_dim - 2) / 4;
  for (ChannelKind kind : config.kinds()) {
    const ChannelSpec spec(kind, config.point_eta);
    body << to_string(kind) << ",qudit-D" << config.point_dim << ','
         << format_real(config.point_eta) << ','
         << format_real(config.point_theta) << ','
         << format_real(config.point_phi) << ','
         << format_real(
                f_damp_state(k, spec, config.point_theta, config.point_phi))
         << ','
         << format_real(
                f_rec_state(k, spec, config.point_theta, config.point_phi))
         << '\n';
  }
  if (config.output_path == "-") {
    out << body.str();
    return kExitOk;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) {
    err << "cannot open output file: " << config.output_path << "\n";
    return kExitIo;
  }
  file << body.str();
  return kExitOk;
}

int run_verify_command(const CliConfig& config, std::ostream& out) {
  const auto results = run_verification(config.suites, config.quadrature);
  bool all_passed = true;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
        << "  max residual " << format_real(r.worst_absolute)
        << " (x" << format_real(r.max_relative) << " of tolerance)";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kExitOk : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliConfig config;
  std::string help_text;
  try {
    config = parse_args(args, &help_text);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (!help_text.empty()) {
    out << help_text;
    return kExitOk;
  }
  try {
    switch (config.command) {
      case CliConfig::Command::sweep:
        return run_sweep_command(config, out, err);
      case CliConfig::Command::point:
        return run_point_command(config, out, err);
      case CliConfig::Command::verify:
        return run_verify_command(config, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

}  // namespace quditphase
