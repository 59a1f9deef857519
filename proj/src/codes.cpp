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

#include "quditphase/codes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quditphase/algebra.hpp"

namespace quditphase {

std::size_t code_dimension(std::size_t k) { return 4 * k + 2; }

ComplexMatrix AmplitudeCode::stabilizer() const {
  return generalized_pauli(dim, 0, 2);
}

ComplexMatrix PhaseCode::stabilizer() const {
  return generalized_pauli(dim, 2, 0);
}

RepetitionCodeSpec::RepetitionCodeSpec(int qubits) : n(qubits) {
  if (qubits < 1 || qubits % 2 == 0)
    throw std::domain_error("repetition code size must be an odd positive integer");
}

std::pair<PureState, PureState> amplitude_codewords(std::size_t k) {
  const std::size_t dim = code_dimension(k);
  return {PureState::basis(dim, 0), PureState::basis(dim, 2 * k + 1)};
}

std::pair<PureState, PureState> phase_codewords(std::size_t k) {
  const std::size_t dim = code_dimension(k);
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cdouble> plus(dim, cdouble{a, 0.0});
  std::vector<cdouble> minus(dim);
  for (std::size_t j = 0; j < dim; ++j)
    minus[j] = (j % 2 == 0) ? cdouble{a, 0.0} : cdouble{-a, 0.0};
  return {PureState(std::move(plus)), PureState(std::move(minus))};
}

std::pair<PureState, PureState> rotated_codewords(std::size_t k) {
  const std::size_t dim = code_dimension(k);
  const double a = 1.0 / std::sqrt(static_cast<double>(2 * k + 1));
  std::vector<cdouble> even(dim), odd(dim);
  for (std::size_t n = 0; n <= 2 * k; ++n) {
    even[2 * n] = a;
    odd[2 * n + 1] = a;
  }
  return {PureState(std::move(even)), PureState(std::move(odd))};
}

ComplexMatrix logical_flip(std::size_t k) {
  const std::size_t dim = code_dimension(k);
  return generalized_pauli(dim, static_cast<long long>(2 * k + 1), 0);
}

ComplexMatrix logical_phase(std::size_t k) {
  const std::size_t dim = code_dimension(k);
  return generalized_pauli(dim, 0, static_cast<long long>(2 * k + 1));
}

PureState logical_state(std::size_t k, double theta, double phi) {
  const std::size_t dim = code_dimension(k);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const cdouble e = std::polar(1.0, phi);
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cdouble> amps(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    amps[l] = a * (c + sign * e * s);
  }
  return PureState(std::move(amps));
}

PureState encode_logical(std::size_t k, double theta, double phi) {
  if (theta < 0.0 || theta > std::numbers::pi)
    throw std::domain_error("encode_logical: theta outside [0, pi]");
  if (phi < 0.0 || phi >= 2.0 * std::numbers::pi)
    throw std::domain_error("encode_logical: phi outside [0, 2 pi)");
  return logical_state(k, theta, phi);
}

ComplexMatrix omega_coefficients(double theta, double phi, std::size_t dim) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const cdouble e = std::polar(1.0, phi);
  ComplexMatrix omega(dim, dim);
  for (std::size_t l = 0; l < dim; ++l) {
    const double sl = (l % 2 == 0) ? 1.0 : -1.0;
    const cdouble left = c + sl * e * s;
    for (std::size_t m = 0; m < dim; ++m) {
      const double sm = (m % 2 == 0) ? 1.0 : -1.0;
      omega(l, m) = left * (c + sm * std::conj(e) * s);
    }
  }
  return omega;
}

}  // namespace quditphase
