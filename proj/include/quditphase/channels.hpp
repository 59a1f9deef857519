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
#include <span>
#include <string>
#include <vector>

#include "quditphase/matrix.hpp"

namespace quditphase {

/// The two phase-damping channel models for a qudit.
///
/// Both fix the computational (Z) basis and suppress coherences between its
/// elements; they differ in how the suppression factor depends on the index
/// difference d = l - m of the density matrix entry:
///   conventional: rho[l,m] -> eta^{d^2} rho[l,m]
///   weyl:         rho[l,m] -> [((1-eta)/2) omega^d + (1+eta)/2]^{D-1} rho[l,m]
/// eta in [0, 1]; eta = 1 is the identity channel, small eta is strong
/// damping. The two coincide for D = 2, where both factors reduce to eta.
enum class ChannelKind { conventional, weyl };

std::string to_string(ChannelKind kind);

struct ChannelSpec {
  ChannelSpec(ChannelKind kind, double eta);
  ChannelKind kind;
  double eta;
};

/// eta = e^{-gamma}; gamma is proportional to the phase-error probability.
double eta_from_gamma(double gamma);

/// Off-diagonal suppression factor f_r(eta, d) for entry difference d.
/// Real for the conventional channel, complex in general for the Weyl
/// channel; f_r(eta, 0) = 1 exactly for both.
cdouble damping_factor(const ChannelSpec& spec, std::size_t dim,
                       long long diff);

/// Elementwise closed-form channel action out[l,m] = rho[l,m] f_r(eta, l-m).
DensityMatrix apply_closed_form(const ChannelSpec& spec,
                                const DensityMatrix& rho);

/// The D Kraus operators of the Weyl phase-damping channel,
///   E_m = sqrt(C(D-1,m) ((1-eta)/2)^m ((1+eta)/2)^{D-1-m}) Z^m,
/// which satisfy sum_m E_m^dagger E_m = I exactly (binomial theorem).
std::vector<ComplexMatrix> weyl_kraus_operators(double eta, std::size_t dim);

/// Truncation i = 0..i_max of the infinite Kraus family of the conventional
/// channel,
///   E_i = sum_j [j sqrt(-2 ln eta)]^i eta^{j^2} / sqrt(i!) |j><j|.
/// Requires eta > 0 (the closed form covers eta = 0). The truncated family
/// reproduces the closed form only up to the tail bound below; the
/// completeness defect decreases monotonically in i_max.
std::vector<ComplexMatrix> conventional_kraus_operators(double eta,
                                                        std::size_t dim,
                                                        std::size_t i_max);

/// Upper bound on the elementwise deviation between the truncated
/// conventional Kraus channel and the closed form: the largest Poisson tail
///   max_{l,m} eta^{(l-m)^2} P[Poisson(l m (-2 ln eta)) > i_max].
/// Grows to order 1 once (D-1)^2 (-2 ln eta) exceeds i_max.
double conventional_kraus_tail_bound(double eta, std::size_t dim,
                                     std::size_t i_max);

/// Smallest i_max whose tail bound is below tol for the given eta and D.
std::size_t conventional_kraus_terms_for(double eta, std::size_t dim,
                                         double tol);

/// sum_i E_i rho E_i^dagger. Trace-preserving only if the family is
/// complete; an empty list yields the zero matrix.
DensityMatrix apply_kraus(std::span<const ComplexMatrix> kraus,
                          const DensityMatrix& rho);

/// Probability weights pi[m,n] of a general Weyl channel (m indexes the
/// shift power, n the phase power); entries in [0,1] summing to 1.
struct WeylWeights {
  WeylWeights(std::size_t dim, std::vector<double> pi);
  double at(std::size_t m, std::size_t n) const { return pi[m * dim + n]; }
  std::size_t dim;
  std::vector<double> pi;  // row-major D x D
};

/// rho -> sum_{m,n} pi[m,n] W rho W^dagger with W = X^m Z^n. (Conjugation
/// by Z^n X^m is identical, the two orderings differ by a scalar phase.)
DensityMatrix apply_general_weyl(const WeylWeights& weights,
                                 const DensityMatrix& rho);

/// C(n, k) evaluated in floating point via the multiplicative recurrence.
double binomial(std::size_t n, std::size_t k);

}  // namespace quditphase
