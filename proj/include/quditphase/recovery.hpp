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

#include <array>
#include <cstddef>
#include <vector>

#include "quditphase/channels.hpp"
#include "quditphase/matrix.hpp"

namespace quditphase {

/// The 2k+1 rank-2 syndrome projectors of the weight-k amplitude code,
///   P(s) = |0+s><0+s| + |2k+1+s><2k+1+s|  (indices mod D = 4k+2),
/// for s = -k..k. Mutually orthogonal, and they tile the whole qudit space:
/// sum_s P(s) = I.
struct SyndromeProjectorSet {
  std::size_t k;
  std::size_t dim;
  std::vector<ComplexMatrix> projectors;  // indexed s + k

  const ComplexMatrix& projector(int s) const;
};

SyndromeProjectorSet syndrome_projectors(std::size_t k);

/// Generalized CNOT N = sum_s P(s) (x) X_A^s on the D*(2k+1) joint space.
/// The ancilla is the minimal one: dimension 2k+1 with the cyclic shift
/// X_A mod 2k+1, and syndrome s stored at ancilla index s mod 2k+1.
ComplexMatrix syndrome_unitary(std::size_t k);

/// Correction unitary C = sum_s X^{-s} (x) |s><s| on the joint space.
ComplexMatrix correction_unitary(std::size_t k);

/// Combined recovery operator R = C N.
ComplexMatrix recovery_unitary(std::size_t k);

/// Recovery map of the amplitude code: the ancilla-traced action of R,
///   rho -> sum_s X^{-s} P(s) rho P(s) X^{s}.
/// The output is supported on span{|0>, |2k+1>} with entries
/// Phi(x, y) = sum_s rho[x+s, y+s].
DensityMatrix recovery_map_amplitude(const DensityMatrix& rho, std::size_t k);

/// Kernel Delta(d, D) = sum_{s=-k}^{k} omega^{s d}, evaluated as the finite
/// sum (exact at d = 0 where the sine quotient is 0/0). Real and even in d;
/// Delta(0, D) = 2k+1 and Delta vanishes for even d != 0.
double recovery_kernel(long long diff, std::size_t dim);

/// Closed form sin(pi d / 2) / sin(pi d / D), with the removable
/// singularity at d = 0 mod D filled in. Cross-check for recovery_kernel.
double recovery_kernel_closed_form(long long diff, std::size_t dim);

/// Cached kernel table over d in (-D, D).
struct RecoveryKernel {
  explicit RecoveryKernel(std::size_t dim);
  double at(long long diff) const { return values[diff + static_cast<long long>(dim) - 1]; }
  std::size_t dim;
  std::vector<double> values;  // indexed d + D - 1
};

/// Recovery map of the phase code: rho -> sum_{x,y} PhiTilde(x,y) |x~><y~|
/// over x, y in {0, 2k+1}, with the computational-basis coefficients
///   PhiTilde(x,y) = (1/D) sum_{l,m} rho[l,m] (-1)^{x l - y m} Delta(l-m, D).
DensityMatrix recovery_map_phase(const DensityMatrix& rho, std::size_t k);

/// The four PhiTilde coefficients, ordered (0,0), (0,2k+1), (2k+1,0),
/// (2k+1,2k+1). Exposed for the rotated-codeword restoration checks.
std::array<cdouble, 4> phase_recovery_coefficients(const DensityMatrix& rho,
                                                   std::size_t k);

/// Damps |zeta_u><zeta_u| with the given channel, applies the phase-code
/// recovery map and checks the restoration: the result must equal the
/// input projector within tol and the four PhiTilde values must be
/// (-1)^u-signed halves. Throws std::runtime_error on violation.
DensityMatrix recover_rotated_codeword_check(std::size_t k, int u,
                                             const ChannelSpec& spec,
                                             double tol = 1e-11);

}  // namespace quditphase
