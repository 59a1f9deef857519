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

#include "quditphase/matrix.hpp"

namespace quditphase {

/// omega = exp(i 2 pi / D), the primitive D-th root of unity.
cdouble root_of_unity(std::size_t dim);

/// exp(i 2 pi power / D) with the exponent reduced mod D before evaluation.
cdouble root_of_unity_power(std::size_t dim, long long power);

/// Cyclic shift X |j> = |j + 1 mod D>.
ComplexMatrix pauli_x(std::size_t dim);

/// Phase operator Z |j> = omega^j |j>.
ComplexMatrix pauli_z(std::size_t dim);

/// X^a Z^b with both exponents reduced mod D. (a, b) = (0, 0) is the
/// identity; together the D^2 products form an operator basis.
ComplexMatrix generalized_pauli(std::size_t dim, long long shift_power,
                                long long phase_power);

/// D x D Fourier matrix H with H[i,j] = omega^{-ij} / sqrt(D). Symmetric,
/// unitary, of order 4. Columns are the rotated basis states, which are
/// eigenstates of X: X H|i> = omega^i H|i>.
ComplexMatrix fourier_matrix(std::size_t dim);

/// Rotated basis state H |index>.
PureState rotated_basis_state(std::size_t dim, std::size_t index);

}  // namespace quditphase
