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

#include <span>
#include <string>
#include <vector>

#include "quditphase/fidelity.hpp"

namespace quditphase {

/// Outcome of one verification suite. max_residual is the largest observed
/// deviation normalized against the tolerance of its own check, so any
/// value above 1 means failure; worst_absolute is the raw deviation behind
/// that worst check.
struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_relative = 0.0;   // residual / tolerance, worst over checks
  double worst_absolute = 0.0;
  std::string detail;          // set when a check throws or fails
};

/// Names of the available suites: algebra, codes, channels, recovery,
/// kernel, fidelity.
const std::vector<std::string>& verification_suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
/// The quadrature orders feed the fidelity suite's quadrature-agreement
/// checks; other suites ignore them.
SuiteResult run_verification_suite(const std::string& name,
                                   QuadratureOrders orders = {});

/// Runs the given suites (all of them when names is empty).
std::vector<SuiteResult> run_verification(std::span<const std::string> names,
                                          QuadratureOrders orders = {});

}  // namespace quditphase
