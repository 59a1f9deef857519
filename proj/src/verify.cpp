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

#include "quditphase/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "quditphase/algebra.hpp"
#include "quditphase/channels.hpp"
#include "quditphase/codes.hpp"
#include "quditphase/fidelity.hpp"
#include "quditphase/matrix.hpp"
#include "quditphase/random.hpp"
#include "quditphase/recovery.hpp"

namespace quditphase {

namespace {

class Tracker {
 public:
  void check(double residual, double tolerance) {
    const double rel = residual / tolerance;
    if (rel > max_relative_) {
      max_relative_ = rel;
      worst_absolute_ = residual;
    }
  }
  void require(bool condition, const std::string& what) {
    if (!condition && failure_.empty()) failure_ = what;
  }
  void finish(SuiteResult& result) const {
    result.max_relative = max_relative_;
    result.worst_absolute = worst_absolute_;
    if (!failure_.empty()) {
      result.passed = false;
      result.detail = failure_;
    } else if (max_relative_ > 1.0) {
      result.passed = false;
      result.detail = "residual above tolerance";
    }
  }

 private:
  double max_relative_ = 0.0;
  double worst_absolute_ = 0.0;
  std::string failure_;
};

constexpr std::uint32_t kSeed = 20260810;

void suite_algebra(Tracker& t) {
  for (std::size_t d = 2; d <= 32; ++d) {
    const ComplexMatrix x = pauli_x(d);
    const ComplexMatrix z = pauli_z(d);
    const ComplexMatrix id = ComplexMatrix::identity(d);
    t.check(max_abs_diff(x * x.adjoint(), id), 1e-13);
    t.check(max_abs_diff(z * z.adjoint(), id), 1e-13);
    // Z X = omega X Z
    t.check(max_abs_diff(z * x, root_of_unity(d) * (x * z)), 1e-13);
    const ComplexMatrix h = fourier_matrix(d);
    t.check(max_abs_diff(h * h.adjoint(), id), 1e-13);
    // H^dagger X H diagonal
    const ComplexMatrix rotated = h.adjoint() * x * h;
    double offdiag = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (i != j) offdiag = std::max(offdiag, std::abs(rotated(i, j)));
    t.check(offdiag, 1e-12);
    // X H|i> = omega^i H|i>
    for (std::size_t i = 0; i < d; ++i) {
      const PureState v = rotated_basis_state(d, i);
      const PureState xv = apply(x, v);
      double res = 0.0;
      const cdouble eig = root_of_unity_power(d, static_cast<long long>(i));
      for (std::size_t j = 0; j < d; ++j)
        res = std::max(res, std::abs(xv[j] - eig * v[j]));
      t.check(res, 1e-12);
    }
  }
  // Fourier matrix has order 4
  const ComplexMatrix h6 = fourier_matrix(6);
  const ComplexMatrix h6sq = h6 * h6;
  t.check(max_abs_diff(h6sq * h6sq, ComplexMatrix::identity(6)), 1e-12);

  // kron and partial trace are mutually consistent
  std::mt19937 rng(kSeed);
  for (std::size_t d : {2u, 3u, 6u}) {
    const DensityMatrix rho = random_density_matrix(rng, d);
    ComplexMatrix anc(3, 3);
    anc(0, 0) = 1.0;
    t.check(max_abs_diff(partial_trace_ancilla(kron(rho.matrix(), anc), d, 3),
                         rho.matrix()),
            1e-14);
    const DensityMatrix sigma = random_density_matrix(rng, 4);
    t.check(max_abs_diff(
                partial_trace_ancilla(kron(rho.matrix(), sigma.matrix()), d, 4),
                rho.matrix()),
            1e-12);
  }
}

void suite_codes(Tracker& t) {
  std::mt19937 rng(kSeed + 1);
  for (std::size_t k = 0; k <= 7; ++k) {
    const std::size_t dim = code_dimension(k);
    const auto [a0, a1] = amplitude_codewords(k);
    const auto [p0, p1] = phase_codewords(k);
    t.check(std::abs(inner_product(a0, a1)), 1e-13);
    t.check(std::abs(inner_product(p0, p1)), 1e-13);
    t.check(std::abs(std::abs(inner_product(p0, p0)) - 1.0), 1e-13);

    // Phase code = Fourier transform of amplitude code.
    const ComplexMatrix h = fourier_matrix(dim);
    const PureState h0 = apply(h, a0);
    const PureState h1 = apply(h, a1);
    double res = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      res = std::max(res, std::abs(h0[j] - p0[j]));
      res = std::max(res, std::abs(h1[j] - p1[j]));
    }
    t.check(res, 1e-12);

    // Stabilization of random superpositions.
    const auto [alpha, beta] = random_amplitude_pair(rng);
    std::vector<cdouble> amp_enc(dim);
    amp_enc[0] = alpha;
    amp_enc[2 * k + 1] = beta;
    const PureState psi_amp(std::move(amp_enc));
    const ComplexMatrix z2 = generalized_pauli(dim, 0, 2);
    const PureState z2psi = apply(z2, psi_amp);
    res = 0.0;
    for (std::size_t j = 0; j < dim; ++j)
      res = std::max(res, std::abs(z2psi[j] - psi_amp[j]));
    t.check(res, 1e-13);

    std::vector<cdouble> ph_enc(dim);
    for (std::size_t j = 0; j < dim; ++j)
      ph_enc[j] = alpha * p0[j] + beta * p1[j];
    const PureState psi_ph(std::move(ph_enc));
    const ComplexMatrix x2 = generalized_pauli(dim, 2, 0);
    const PureState x2psi = apply(x2, psi_ph);
    res = 0.0;
    for (std::size_t j = 0; j < dim; ++j)
      res = std::max(res, std::abs(x2psi[j] - psi_ph[j]));
    t.check(res, 1e-13);

    // Error detection: Z^2 X^s |psi> = omega^{2s} X^s |psi>.
    for (long long s = 1; s <= static_cast<long long>(k); ++s) {
      for (long long sign : {1ll, -1ll}) {
        const PureState corrupted =
            apply(generalized_pauli(dim, sign * s, 0), psi_amp);
        const PureState detected = apply(z2, corrupted);
        const cdouble eig = root_of_unity_power(dim, 2 * sign * s);
        res = 0.0;
        for (std::size_t j = 0; j < dim; ++j)
          res = std::max(res, std::abs(detected[j] - eig * corrupted[j]));
        t.check(res, 1e-12);
      }
    }

    // Rotated codewords: eigenstates of the logical phase gate, swapped by X.
    const auto [zeta0, zeta1] = rotated_codewords(k);
    const ComplexMatrix zbar = logical_phase(k);
    const ComplexMatrix x = pauli_x(dim);
    const PureState zb0 = apply(zbar, zeta0);
    const PureState zb1 = apply(zbar, zeta1);
    const PureState x0 = apply(x, zeta0);
    res = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      res = std::max(res, std::abs(zb0[j] - zeta0[j]));
      res = std::max(res, std::abs(zb1[j] + zeta1[j]));
      res = std::max(res, std::abs(x0[j] - zeta1[j]));
    }
    t.check(res, 1e-13);
  }
}

void suite_channels(Tracker& t) {
  std::mt19937 rng(kSeed + 2);
  const std::vector<double> etas{0.0, 0.25, 0.5, 0.75, 1.0};
  for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl}) {
    for (std::size_t dim : {2u, 6u, 10u, 18u, 30u}) {
      for (double eta : etas) {
        const ChannelSpec spec(kind, eta);
        for (int trial = 0; trial < 100; ++trial) {
          const DensityMatrix rho = random_density_matrix(rng, dim);
          const DensityMatrix out = apply_closed_form(spec, rho);
          t.check(std::abs(out.matrix().trace() - cdouble{1.0, 0.0}), 1e-12);
          t.check(max_abs_diff(out.matrix(), out.matrix().adjoint()), 1e-12);
          t.check(std::max(0.0, -min_eigenvalue(out.matrix())), 1e-9);
        }
        // Diagonal states are fixed points.
        ComplexMatrix diag(dim, dim);
        double norm = 0.0;
        for (std::size_t j = 0; j < dim; ++j) norm += static_cast<double>(j + 1);
        for (std::size_t j = 0; j < dim; ++j)
          diag(j, j) = static_cast<double>(j + 1) / norm;
        const DensityMatrix fixed(std::move(diag));
        t.check(max_abs_diff(apply_closed_form(spec, fixed).matrix(),
                             fixed.matrix()),
                1e-13);
      }
    }
  }
  // Both kinds coincide at D = 2 where f(+-1) = eta.
  for (double eta : etas) {
    t.check(std::abs(damping_factor(ChannelSpec(ChannelKind::conventional, eta), 2, 1) - eta), 1e-14);
    t.check(std::abs(damping_factor(ChannelSpec(ChannelKind::weyl, eta), 2, 1) - eta), 1e-14);
  }
  // Weyl Kraus family reproduces the closed form exactly.
  for (std::size_t dim : {2u, 6u, 10u, 18u, 30u}) {
    for (double eta : {0.0, 0.3, 0.7, 1.0}) {
      const DensityMatrix rho = random_density_matrix(rng, dim);
      const auto kraus = weyl_kraus_operators(eta, dim);
      ComplexMatrix completeness(dim, dim);
      for (const auto& e : kraus) completeness += e.adjoint() * e;
      t.check(max_abs_diff(completeness, ComplexMatrix::identity(dim)), 1e-12);
      t.check(max_abs_diff(
                  apply_kraus(kraus, rho).matrix(),
                  apply_closed_form(ChannelSpec(ChannelKind::weyl, eta), rho)
                      .matrix()),
              1e-12);
    }
  }
  // Truncated conventional family: within the documented tail bound at
  // i_max = 60, and within 1e-10 once i_max satisfies the bound.
  for (std::size_t dim : {2u, 6u, 10u}) {
    for (double eta : {0.1, 0.3, 0.7, 1.0}) {
      const ChannelSpec spec(ChannelKind::conventional, eta);
      const DensityMatrix rho = random_density_matrix(rng, dim);
      const DensityMatrix exact = apply_closed_form(spec, rho);
      const auto kraus60 = conventional_kraus_operators(eta, dim, 60);
      const double dev60 =
          max_abs_diff(apply_kraus(kraus60, rho).matrix(), exact.matrix());
      t.require(dev60 <= conventional_kraus_tail_bound(eta, dim, 60) + 1e-12,
                "conventional Kraus deviation exceeds its tail bound");
      const std::size_t enough = conventional_kraus_terms_for(eta, dim, 1e-11);
      const auto kraus_full = conventional_kraus_operators(eta, dim, enough);
      t.check(max_abs_diff(apply_kraus(kraus_full, rho).matrix(),
                           exact.matrix()),
              1e-10);
      // Completeness defect decreases monotonically in i_max.
      double last = 1e300;
      for (std::size_t imax : {0u, 5u, 20u, 60u}) {
        const auto family = conventional_kraus_operators(eta, dim, imax);
        ComplexMatrix sum(dim, dim);
        for (const auto& e : family) sum += e.adjoint() * e;
        const double defect =
            max_abs_diff(sum, ComplexMatrix::identity(dim));
        t.require(defect <= last + 1e-15,
                  "completeness defect not monotone in i_max");
        last = defect;
      }
    }
  }
  // General Weyl channel: identity weights, binomial column, uniform twirl.
  for (std::size_t dim : {2u, 3u, 6u}) {
    const DensityMatrix rho = random_density_matrix(rng, dim);
    std::vector<double> ident(dim * dim, 0.0);
    ident[0] = 1.0;
    t.check(max_abs_diff(
                apply_general_weyl(WeylWeights(dim, ident), rho).matrix(),
                rho.matrix()),
            1e-13);
    const double eta = 0.4;
    std::vector<double> column(dim * dim, 0.0);
    for (std::size_t n = 0; n < dim; ++n)
      column[n] = binomial(dim - 1, n) * std::pow(0.5 * (1.0 - eta), n) *
                  std::pow(0.5 * (1.0 + eta), dim - 1 - n);
    t.check(max_abs_diff(
                apply_general_weyl(WeylWeights(dim, column), rho).matrix(),
                apply_closed_form(ChannelSpec(ChannelKind::weyl, eta), rho)
                    .matrix()),
            1e-12);
    std::vector<double> uniform(dim * dim,
                                1.0 / static_cast<double>(dim * dim));
    t.check(max_abs_diff(
                apply_general_weyl(WeylWeights(dim, uniform), rho).matrix(),
                DensityMatrix::maximally_mixed(dim).matrix()),
            1e-12);
  }
}

void suite_recovery(Tracker& t) {
  std::mt19937 rng(kSeed + 3);
  // Circuit and closed map agree for both codes.
  for (std::size_t k : {0u, 1u, 2u}) {
    const std::size_t dim = code_dimension(k);
    const std::size_t adim = 2 * k + 1;
    const ComplexMatrix r = recovery_unitary(k);
    t.check(max_abs_diff(r * r.adjoint(),
                         ComplexMatrix::identity(dim * adim)),
            1e-12);
    const ComplexMatrix h = fourier_matrix(dim);
    ComplexMatrix anc(adim, adim);
    anc(0, 0) = 1.0;
    for (int trial = 0; trial < 50; ++trial) {
      const DensityMatrix rho = random_density_matrix(rng, dim);
      const ComplexMatrix joint = r * kron(rho.matrix(), anc) * r.adjoint();
      const ComplexMatrix circuit = partial_trace_ancilla(joint, dim, adim);
      t.check(max_abs_diff(circuit, recovery_map_amplitude(rho, k).matrix()),
              1e-12);
      // Phase recovery = Fourier-conjugated amplitude recovery.
      const ComplexMatrix rot = h.adjoint() * rho.matrix() * h;
      const ComplexMatrix joint_ph = r * kron(rot, anc) * r.adjoint();
      const ComplexMatrix circuit_ph =
          h * partial_trace_ancilla(joint_ph, dim, adim) * h.adjoint();
      t.check(max_abs_diff(circuit_ph, recovery_map_phase(rho, k).matrix()),
              1e-12);
    }
  }
  // Exact correction of in-distance shifts.
  for (std::size_t k = 0; k <= 5; ++k) {
    const std::size_t dim = code_dimension(k);
    const auto [a0, a1] = amplitude_codewords(k);
    const auto [p0, p1] = phase_codewords(k);
    for (int trial = 0; trial < 20; ++trial) {
      const auto [alpha, beta] = random_amplitude_pair(rng);
      std::vector<cdouble> amp(dim), ph(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        amp[j] = alpha * a0[j] + beta * a1[j];
        ph[j] = alpha * p0[j] + beta * p1[j];
      }
      const PureState psi_amp(std::move(amp));
      const PureState psi_ph(std::move(ph));
      for (long long s = -static_cast<long long>(k);
           s <= static_cast<long long>(k); ++s) {
        const PureState shifted =
            apply(generalized_pauli(dim, s, 0), psi_amp);
        const double f_amp = state_fidelity(
            psi_amp,
            recovery_map_amplitude(DensityMatrix::pure(shifted), k));
        t.check(std::abs(f_amp - 1.0), 1e-12);
        const PureState phased =
            apply(generalized_pauli(dim, 0, s), psi_ph);
        const double f_ph = state_fidelity(
            psi_ph, recovery_map_phase(DensityMatrix::pure(phased), k));
        t.check(std::abs(f_ph - 1.0), 1e-12);
      }
    }
  }
  // A shift just beyond the distance lands in the wrong codeword subspace.
  for (std::size_t k : {0u, 1u, 2u, 3u}) {
    const std::size_t dim = code_dimension(k);
    const auto [a0, a1] = amplitude_codewords(k);
    const double c = std::cos(std::numbers::pi / 8);
    const double s = std::sin(std::numbers::pi / 8);
    std::vector<cdouble> amp(dim);
    for (std::size_t j = 0; j < dim; ++j) amp[j] = c * a0[j] + s * a1[j];
    const PureState psi(std::move(amp));
    const PureState shifted = apply(
        generalized_pauli(dim, static_cast<long long>(k) + 1, 0), psi);
    const double f = state_fidelity(
        psi, recovery_map_amplitude(DensityMatrix::pure(shifted), k));
    t.require(f <= 1.0 - 1e-3, "beyond-distance shift not detected as failure");
  }
  // Phase recovery output lies in the span of the four codeword dyads.
  for (std::size_t k : {1u, 2u}) {
    const std::size_t dim = code_dimension(k);
    const auto [p0, p1] = phase_codewords(k);
    const DensityMatrix rho = random_density_matrix(rng, dim);
    const DensityMatrix rec = recovery_map_phase(rho, k);
    const auto phi = phase_recovery_coefficients(rho, k);
    ComplexMatrix span(dim, dim);
    const std::array<const PureState*, 2> basis{&p0, &p1};
    std::size_t idx = 0;
    for (const PureState* xs : basis)
      for (const PureState* ys : basis) {
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j)
            span(i, j) += phi[idx] * (*xs)[i] * std::conj((*ys)[j]);
        ++idx;
      }
    t.check(max_abs_diff(rec.matrix(), span), 1e-12);
    // Two-route coefficients: rotate with the Fourier matrix, then sum
    // the shifted diagonal blocks.
    const ComplexMatrix h = fourier_matrix(dim);
    const ComplexMatrix rot = h.adjoint() * rho.matrix() * h;
    const std::array<std::size_t, 2> support{0, 2 * k + 1};
    idx = 0;
    for (std::size_t x : support)
      for (std::size_t y : support) {
        cdouble direct = 0.0;
        for (long long s = -static_cast<long long>(k);
             s <= static_cast<long long>(k); ++s) {
          const auto xi = static_cast<std::size_t>(
              (static_cast<long long>(x) + s + dim) % dim);
          const auto yi = static_cast<std::size_t>(
              (static_cast<long long>(y) + s + dim) % dim);
          direct += rot(xi, yi);
        }
        t.check(std::abs(direct - phi[idx++]), 1e-12);
      }
  }
}

void suite_kernel(Tracker& t) {
  for (std::size_t dim : {2u, 6u, 10u, 18u, 30u}) {
    const std::size_t k = (dim - 2) / 4;
    for (long long d = -(static_cast<long long>(dim) - 1);
         d < static_cast<long long>(dim); ++d) {
      const double sum = recovery_kernel(d, dim);
      t.check(std::abs(sum - recovery_kernel_closed_form(d, dim)), 1e-12);
      t.check(std::abs(sum - recovery_kernel(-d, dim)), 1e-13);
      t.require(std::abs(sum) <= static_cast<double>(2 * k + 1) + 1e-12,
                "kernel magnitude exceeds 2k+1");
      if (d != 0 && d % 2 == 0) t.check(std::abs(sum), 1e-12);
    }
    t.check(std::abs(recovery_kernel(0, dim) - static_cast<double>(2 * k + 1)),
            0.0 + 1e-15);
  }
}

void suite_fidelity(Tracker& t, QuadratureOrders orders) {
  std::mt19937 rng(kSeed + 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Closed forms against the explicit encode -> damp -> recover -> overlap
  // pipeline.
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng() % 4);
    const ChannelKind kind =
        (rng() % 2 == 0) ? ChannelKind::conventional : ChannelKind::weyl;
    const ChannelSpec spec(kind, unit(rng));
    const double theta = std::numbers::pi * unit(rng);
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const PureState input = logical_state(k, theta, phi);
    const DensityMatrix damped =
        apply_closed_form(spec, DensityMatrix::pure(input));
    t.check(std::abs(f_damp_state(k, spec, theta, phi) -
                     state_fidelity(input, damped)),
            1e-10);
    t.check(std::abs(f_rec_state(k, spec, theta, phi) -
                     state_fidelity(input, recovery_map_phase(damped, k))),
            1e-10);
  }
  // Quadrature agreement with the closed-form averages.
  for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl}) {
    for (std::size_t dim : {2u, 6u, 18u, 30u}) {
      const std::size_t k = (dim - 2) / 4;
      for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const ChannelSpec spec(kind, eta);
        t.check(std::abs(f_damp_avg(dim, spec) -
                         bloch_average(
                             [&](double th, double ph) {
                               return f_damp_state(k, spec, th, ph);
                             },
                             orders)),
                1e-6);
        t.check(std::abs(f_rec_avg(dim, spec) -
                         bloch_average(
                             [&](double th, double ph) {
                               return f_rec_state(k, spec, th, ph);
                             },
                             orders)),
                1e-6);
        if (eta == 1.0) {
          t.check(std::abs(f_damp_avg(dim, spec) - 1.0), 1e-12);
          t.check(std::abs(f_rec_avg(dim, spec) - 1.0), 1e-12);
        }
      }
    }
  }
  // D = 2: recovery changes nothing and the average is (2 + eta)/3.
  for (double eta : eta_grid(0.0, 1.0, 101)) {
    for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl}) {
      const ChannelSpec spec(kind, eta);
      t.check(std::abs(f_damp_avg(2, spec) - (2.0 + eta) / 3.0), 1e-12);
      t.check(std::abs(f_rec_avg(2, spec) - (2.0 + eta) / 3.0), 1e-12);
    }
  }
  // Conventional channel: recovery never hurts, and the matched repetition
  // code stays above the qudit code, on the full grid.
  for (std::size_t dim : {6u, 18u, 30u}) {
    for (double eta : eta_grid(0.0, 1.0, 101)) {
      const ChannelSpec spec(ChannelKind::conventional, eta);
      const double rec = f_rec_avg(dim, spec);
      t.require(rec >= f_damp_avg(dim, spec) - 1e-10,
                "conventional recovery fell below the damped fidelity");
      t.require(repetition_fidelity(repetition_n_for_dim(dim), eta) >=
                    rec - 1e-10,
                "qudit code beat the repetition code on the conventional channel");
    }
  }
  // Weyl channel regime checks away from the crossover.
  {
    const ChannelSpec weak(ChannelKind::weyl, 0.9);
    t.require(f_rec_avg(18, weak) > repetition_fidelity(3, 0.9),
              "D=18 qudit code does not beat rep-3 at eta=0.9");
    t.require(f_rec_avg(30, weak) > repetition_fidelity(5, 0.9),
              "D=30 qudit code does not beat rep-5 at eta=0.9");
    t.require(f_rec_avg(6, weak) < repetition_fidelity(3, 0.9),
              "D=6 qudit code unexpectedly beats rep-3 at eta=0.9");
    const ChannelSpec strong(ChannelKind::weyl, 0.3);
    t.require(f_rec_avg(30, strong) < f_damp_avg(2, strong),
              "D=30 qudit code beats the unencoded qubit at eta=0.3");
  }
}

using SuiteFn = std::function<void(Tracker&, QuadratureOrders)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"algebra", [](Tracker& t, QuadratureOrders) { suite_algebra(t); }},
      {"codes", [](Tracker& t, QuadratureOrders) { suite_codes(t); }},
      {"channels", [](Tracker& t, QuadratureOrders) { suite_channels(t); }},
      {"recovery", [](Tracker& t, QuadratureOrders) { suite_recovery(t); }},
      {"kernel", [](Tracker& t, QuadratureOrders) { suite_kernel(t); }},
      {"fidelity", suite_fidelity},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verification_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suite_table()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_verification_suite(const std::string& name,
                                   QuadratureOrders orders) {
  for (const auto& [suite_name, fn] : suite_table()) {
    if (suite_name != name) continue;
    SuiteResult result;
    result.name = name;
    Tracker tracker;
    try {
      fn(tracker, orders);
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = e.what();
      return result;
    }
    tracker.finish(result);
    return result;
  }
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_verification(std::span<const std::string> names,
                                          QuadratureOrders orders) {
  std::vector<SuiteResult> results;
  if (names.empty()) {
    for (const auto& name : verification_suite_names())
      results.push_back(run_verification_suite(name, orders));
  } else {
    for (const auto& name : names)
      results.push_back(run_verification_suite(name, orders));
  }
  return results;
}

}  // namespace quditphase
