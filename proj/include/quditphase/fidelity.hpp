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

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "quditphase/channels.hpp"
#include "quditphase/matrix.hpp"

namespace quditphase {

/// Bloch parameterization of a logical input, theta in [0, pi] and
/// phi in [0, 2 pi). Construction enforces the ranges.
struct BlochAngles {
  BlochAngles(double theta, double phi);
  double theta;
  double phi;
};

/// <psi| rho |psi>; the imaginary residue must stay below 1e-12.
double state_fidelity(const PureState& psi, const DensityMatrix& rho);

/// Input-output fidelity of the damped (unrecovered) logical state
/// |theta, phi> of the weight-k phase code:
///   F = (1/D^2) sum_{l,m} |Omega[l,m]|^2 f_r(eta, l-m).
/// Angles outside the canonical Bloch ranges are accepted (periodic).
double f_damp_state(std::size_t k, const ChannelSpec& spec, double theta,
                    double phi);

/// Bloch-sphere average of f_damp_state in closed form:
///   F = (1/(3 D^2)) sum_{l,m} [3 + (-1)^{l-m}] f_r(eta, l-m).
double f_damp_avg(std::size_t dim, const ChannelSpec& spec);

/// Input-output fidelity after damping plus phase-code recovery:
///   F = (1/D^2) sum_{l,m} Omega[l,m] f_r(eta, l-m) Delta(l-m, D)
///       [cos^2(t/2) + (-1)^m cs e^{i phi} + (-1)^l cs e^{-i phi}
///        + (-1)^{l-m} sin^2(t/2)].
double f_rec_state(std::size_t k, const ChannelSpec& spec, double theta,
                   double phi);

/// Bloch-sphere average of f_rec_state in closed form:
///   F = (1/(3 D^2)) sum_{l,m} [3 + (-1)^{l-m}] f_r(eta, l-m) Delta(l-m, D).
/// Coincides with f_damp_avg at D = 2 where Delta is identically 1.
double f_rec_avg(std::size_t dim, const ChannelSpec& spec);

/// Recovered fidelity of the n-qubit repetition code under qubit phase
/// damping (identical for both channel kinds):
///   sum_{j <= (n-1)/2} C(n,j) q^{n-j} p^j + (1/3) sum_{j > (n-1)/2} ...
/// with p = (1-eta)/2, q = (1+eta)/2. n must be odd; n = 1 reproduces the
/// unencoded value (2+eta)/3.
double repetition_fidelity(int n, double eta);

/// Smallest odd integer >= log2(D): the repetition-code size matched
/// against the qudit code of dimension D.
int repetition_n_for_dim(std::size_t dim);

/// Quadrature orders for the Bloch-sphere average: Gauss-Legendre in
/// cos(theta) and a uniform periodic rule in phi. The integrands here are
/// low-degree trigonometric polynomials, so the defaults are exact to
/// ~1e-10 or better.
struct QuadratureOrders {
  int polar = 8;
  int azimuthal = 16;
};

/// (1/4pi) int sin(theta) dtheta int dphi f(theta, phi).
double bloch_average(const std::function<double(double, double)>& f,
                     QuadratureOrders orders = {});

/// One row of a fidelity sweep.
struct SweepRecord {
  ChannelKind kind;
  std::string code;  // "qudit-D6", "rep-n3", ...
  double eta;
  double f_damp;
  double f_rec;
};

struct SweepConfig {
  std::vector<ChannelKind> kinds{ChannelKind::conventional, ChannelKind::weyl};
  std::vector<std::size_t> dims{2, 6, 18, 30};
  std::vector<double> etas;
  bool include_repetition = true;
};

/// Uniform eta grid with exact endpoints; steps = 1 yields {min}.
std::vector<double> eta_grid(double eta_min, double eta_max,
                             std::size_t steps);

/// Evaluates the closed-form averaged fidelities over the grid. One record
/// per (kind, dim, eta); when include_repetition is set, one extra record
/// per (kind, n, eta) for each distinct n = repetition_n_for_dim(dim), with
/// f_rec the repetition fidelity and f_damp its n = 1 (unencoded) value.
/// Records come back sorted by (kind, code, eta).
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

}  // namespace quditphase
