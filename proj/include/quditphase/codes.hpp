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
#include <utility>

#include "quditphase/matrix.hpp"

namespace quditphase {

/// Qudit dimension hosting a code of shift weight k: D = 4k + 2.
std::size_t code_dimension(std::size_t k);

std::pair<PureState, PureState> amplitude_codewords(std::size_t k);
std::pair<PureState, PureState> phase_codewords(std::size_t k);

/// Minimal code correcting up to k amplitude shifts X^{+-s}, s <= k.
/// Codewords are the computational basis states |0> and |2k+1>, stabilized
/// by Z^2. k = 0 (D = 2) is the unencoded qubit.
struct AmplitudeCode {
  explicit AmplitudeCode(std::size_t weight)
      : k(weight), dim(code_dimension(weight)) {}
  std::pair<PureState, PureState> codewords() const {
    return amplitude_codewords(k);
  }
  ComplexMatrix stabilizer() const;  // Z^2
  std::size_t k;
  std::size_t dim;
};

/// Minimal code correcting up to k phase shifts Z^{+-s}; the Fourier
/// transform of the amplitude code, stabilized by X^2.
struct PhaseCode {
  explicit PhaseCode(std::size_t weight)
      : k(weight), dim(code_dimension(weight)) {}
  std::pair<PureState, PureState> codewords() const {
    return phase_codewords(k);
  }
  ComplexMatrix stabilizer() const;  // X^2
  std::size_t k;
  std::size_t dim;
};

/// n-qubit majority-vote repetition code descriptor. Only the analytic
/// fidelity of the code is ever evaluated; no 2^n-dimensional simulation is
/// built. n is restricted to odd values: majority voting needs an odd block,
/// and the fidelity formula at n = 1 already reproduces the unencoded qubit,
/// so even sizes (sometimes loosely identified with the unencoded case) are
/// rejected rather than aliased.
struct RepetitionCodeSpec {
  explicit RepetitionCodeSpec(int qubits);
  int n;
};

/// amplitude_codewords: (|0>, |2k+1>) in dimension 4k+2.
/// phase_codewords: (|+bar>, |-bar>) =
/// (D^{-1/2} sum_j |j>, D^{-1/2} sum_j (-1)^j |j>), the Fourier transforms
/// of the amplitude codewords.

/// (zeta_0, zeta_1) = ((|+bar> + |-bar>)/sqrt2, (|+bar> - |-bar>)/sqrt2):
/// the even-ket and odd-ket uniform superpositions. Eigenstates of the
/// logical phase gate, swapped by a single shift X.
std::pair<PureState, PureState> rotated_codewords(std::size_t k);

/// Logical flip X^{2k+1}: maps amplitude codeword 0 to codeword 1.
ComplexMatrix logical_flip(std::size_t k);

/// Logical phase Z^{2k+1}: maps |+bar> to |-bar>; squares to the identity.
ComplexMatrix logical_phase(std::size_t k);

/// cos(theta/2)|+bar> + e^{i phi} sin(theta/2)|-bar>. Computational-basis
/// amplitudes are D^{-1/2} [cos(theta/2) + (-1)^l e^{i phi} sin(theta/2)].
/// Accepts any real angles; no range restriction (the map is periodic).
PureState logical_state(std::size_t k, double theta, double phi);

/// Same as logical_state but restricted to the canonical Bloch ranges
/// theta in [0, pi], phi in [0, 2 pi); throws std::domain_error otherwise.
PureState encode_logical(std::size_t k, double theta, double phi);

/// Coefficient matrix Omega[l,m] =
///   [cos(t/2) + (-1)^l e^{i phi} sin(t/2)] *
///   [cos(t/2) + (-1)^m e^{-i phi} sin(t/2)];
/// (1/D) Omega is the density matrix of the encoded logical state.
ComplexMatrix omega_coefficients(double theta, double phi, std::size_t dim);

}  // namespace quditphase
