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

#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "quditphase/fidelity.hpp"

namespace quditphase {

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitEmpty = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  enum class Command { sweep, point, verify };
  enum class ChannelChoice { conventional, weyl, both };

  Command command = Command::sweep;
  ChannelChoice channel = ChannelChoice::both;
  std::vector<std::size_t> dims{2, 6, 18, 30};
  double eta_min = 0.0;
  double eta_max = 1.0;
  std::size_t eta_steps = 101;
  bool include_repetition = true;
  // When set (the default), a sweep that lacks the D = 2 entry still gets
  // the unencoded damped-baseline rows; disable with --no-damped.
  bool include_damped = true;
  std::string output_path = "-";  // "-" means standard output
  QuadratureOrders quadrature{8, 16};

  // point command
  std::size_t point_dim = 6;
  double point_eta = 0.5;
  double point_theta = 0.0;
  double point_phi = 0.0;

  // verify command
  std::vector<std::string> suites;

  std::vector<ChannelKind> kinds() const;
};

/// Parses the sweep/point/verify command line. Throws UsageError with the
/// offending flag named; a help request sets help_requested and returns.
CliConfig parse_args(const std::vector<std::string>& args,
                     std::string* help_text = nullptr);

/// 12 significant digits, C locale, fixed '.' decimal point.
std::string format_real(double value);

/// Writes `channel,code,eta,f_damp,f_rec` rows, sorted, with a trailing
/// newline. Output is deterministic byte-for-byte.
void emit_csv(std::span<const SweepRecord> records, std::ostream& out);

/// emit_csv to path ("-" = out stream) with the tool's exit-code contract:
/// kExitEmpty for an empty record list, kExitIo for an unwritable
/// destination, kExitOk otherwise.
int emit_records(std::span<const SweepRecord> records,
                 const std::string& path, std::ostream& out,
                 std::ostream& err);

/// Full tool entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace quditphase
