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

#include "quditphase/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "quditphase/codes.hpp"
#include "quditphase/recovery.hpp"

namespace quditphase {

namespace {

void check_code_dim(std::size_t dim) {
  if (dim < 2 || dim % 4 != 2)
    throw std::domain_error("dimension must be 2 or 4k+2");
}

double real_part_checked(cdouble value, double imag_tol) {
  if (std::abs(value.imag()) > imag_tol)
    throw std::runtime_error("fidelity sum has a non-negligible imaginary part");
  return value.real();
}

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

}  // namespace

BlochAngles::BlochAngles(double theta_, double phi_)
    : theta(theta_), phi(phi_) {
  if (theta < 0.0 || theta > std::numbers::pi)
    throw std::domain_error("BlochAngles: theta outside [0, pi]");
  if (phi < 0.0 || phi >= 2.0 * std::numbers::pi)
    throw std::domain_error("BlochAngles: phi outside [0, 2 pi)");
}

double state_fidelity(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim())
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  cdouble acc = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    cdouble row = 0.0;
    for (std::size_t j = 0; j < psi.dim(); ++j)
      row += rho.entry(i, j) * psi[j];
    acc += std::conj(psi[i]) * row;
  }
  return real_part_checked(acc, 1e-12);
}

double f_damp_state(std::size_t k, const ChannelSpec& spec, double theta,
                    double phi) {
  const std::size_t dim = code_dimension(k);
  const ComplexMatrix omega = omega_coefficients(theta, phi, dim);
  cdouble acc = 0.0;
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t m = 0; m < dim; ++m)
      acc += std::norm(omega(l, m)) *
             damping_factor(spec, dim,
                            static_cast<long long>(l) -
                                static_cast<long long>(m));
  const double d2 = static_cast<double>(dim) * static_cast<double>(dim);
  return real_part_checked(acc, 1e-10) / d2;
}

double f_damp_avg(std::size_t dim, const ChannelSpec& spec) {
  check_code_dim(dim);
  cdouble acc = 0.0;
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t m = 0; m < dim; ++m) {
      const long long d = static_cast<long long>(l) - static_cast<long long>(m);
      const double parity = (d % 2 == 0) ? 1.0 : -1.0;
      acc += (3.0 + parity) * damping_factor(spec, dim, d);
    }
  const double d2 = static_cast<double>(dim) * static_cast<double>(dim);
  return real_part_checked(acc, 1e-10) / (3.0 * d2);
}

double f_rec_state(std::size_t k, const ChannelSpec& spec, double theta,
                   double phi) {
  const std::size_t dim = code_dimension(k);
  const ComplexMatrix omega = omega_coefficients(theta, phi, dim);
  const RecoveryKernel kernel(dim);
  const double c2 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
  const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
  const double cs = 0.5 * std::sin(theta);
  const cdouble e = std::polar(1.0, phi);
  cdouble acc = 0.0;
  for (std::size_t l = 0; l < dim; ++l) {
    const double sl = (l % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t m = 0; m < dim; ++m) {
      const long long d = static_cast<long long>(l) - static_cast<long long>(m);
      const double delta = kernel.at(d);
      if (delta == 0.0) continue;
      const double sm = (m % 2 == 0) ? 1.0 : -1.0;
      const cdouble bracket =
          c2 + sm * cs * e + sl * cs * std::conj(e) + sl * sm * s2;
      acc += omega(l, m) * damping_factor(spec, dim, d) * delta * bracket;
    }
  }
  const double d2 = static_cast<double>(dim) * static_cast<double>(dim);
  return real_part_checked(acc, 1e-10) / d2;
}

double f_rec_avg(std::size_t dim, const ChannelSpec& spec) {
  check_code_dim(dim);
  const RecoveryKernel kernel(dim);
  cdouble acc = 0.0;
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t m = 0; m < dim; ++m) {
      const long long d = static_cast<long long>(l) - static_cast<long long>(m);
      const double delta = kernel.at(d);
      if (delta == 0.0) continue;
      const double parity = (d % 2 == 0) ? 1.0 : -1.0;
      acc += (3.0 + parity) * damping_factor(spec, dim, d) * delta;
    }
  const double d2 = static_cast<double>(dim) * static_cast<double>(dim);
  return real_part_checked(acc, 1e-10) / (3.0 * d2);
}

double repetition_fidelity(int n, double eta) {
  if (n < 1 || n % 2 == 0)
    throw std::domain_error("repetition_fidelity: n must be an odd positive integer");
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("repetition_fidelity: eta must lie in [0, 1]");
  const double p = 0.5 * (1.0 - eta);  // phase-flip probability per qubit
  const double q = 0.5 * (1.0 + eta);
  const std::size_t nn = static_cast<std::size_t>(n);
  double corrected = 0.0, failed = 0.0;
  for (std::size_t j = 0; j <= nn; ++j) {
    const double term = binomial(nn, j) * std::pow(q, nn - j) * std::pow(p, j);
    if (j <= (nn - 1) / 2)
      corrected += term;
    else
      failed += term;
  }
  return corrected + failed / 3.0;
}

int repetition_n_for_dim(std::size_t dim) {
  if (dim < 2)
    throw std::domain_error("repetition_n_for_dim: dimension must be >= 2");
  // ceil(log2(dim)) via integer arithmetic: bit length of dim - 1.
  int bits = 0;
  for (std::size_t v = dim - 1; v > 0; v >>= 1u) ++bits;
  return (bits % 2 == 0) ? bits + 1 : bits;
}

double bloch_average(const std::function<double(double, double)>& f,
                     QuadratureOrders orders) {
  if (orders.polar < 1 || orders.azimuthal < 1)
    throw std::invalid_argument("bloch_average: quadrature orders must be positive");
  std::vector<double> nodes, weights;
  gauss_legendre(orders.polar, nodes, weights);
  double acc = 0.0;
  for (int i = 0; i < orders.polar; ++i) {
    const double theta = std::acos(nodes[i]);
    double ring = 0.0;
    for (int j = 0; j < orders.azimuthal; ++j) {
      const double phi =
          2.0 * std::numbers::pi * j / static_cast<double>(orders.azimuthal);
      ring += f(theta, phi);
    }
    acc += weights[i] * ring / static_cast<double>(orders.azimuthal);
  }
  return acc / 2.0;  // weights integrate to 2 over cos(theta) in [-1, 1]
}

std::vector<double> eta_grid(double eta_min, double eta_max,
                             std::size_t steps) {
  if (steps < 1) throw std::domain_error("eta_grid: need at least one step");
  if (!(eta_min >= 0.0 && eta_max <= 1.0 && eta_min <= eta_max))
    throw std::domain_error("eta_grid: need 0 <= eta_min <= eta_max <= 1");
  std::vector<double> grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(eta_min);
    return grid;
  }
  for (std::size_t i = 0; i < steps; ++i)
    grid.push_back(i + 1 == steps
                       ? eta_max
                       : eta_min + (eta_max - eta_min) *
                                       static_cast<double>(i) /
                                       static_cast<double>(steps - 1));
  return grid;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  for (std::size_t dim : config.dims) check_code_dim(dim);
  std::vector<SweepRecord> records;
  for (ChannelKind kind : config.kinds) {
    for (std::size_t dim : config.dims) {
      const std::string label = "qudit-D" + std::to_string(dim);
      for (double eta : config.etas) {
        const ChannelSpec spec(kind, eta);
        records.push_back(
            {kind, label, eta, f_damp_avg(dim, spec), f_rec_avg(dim, spec)});
      }
    }
    if (config.include_repetition) {
      std::set<int> sizes;
      for (std::size_t dim : config.dims) sizes.insert(repetition_n_for_dim(dim));
      for (int n : sizes) {
        const std::string label = "rep-n" + std::to_string(n);
        for (double eta : config.etas)
          records.push_back({kind, label, eta, repetition_fidelity(1, eta),
                             repetition_fidelity(n, eta)});
      }
    }
  }
  std::sort(records.begin(), records.end(),
            [](const SweepRecord& a, const SweepRecord& b) {
              const auto ka = to_string(a.kind);
              const auto kb = to_string(b.kind);
              if (ka != kb) return ka < kb;
              if (a.code != b.code) return a.code < b.code;
              return a.eta < b.eta;
            });
  return records;
}

}  // namespace quditphase
