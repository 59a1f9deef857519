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

#include "quditphase/algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quditphase {

namespace {

void check_dim(std::size_t dim) {
  if (dim < 2)
    throw std::invalid_argument("qudit dimension must be at least 2");
}

std::size_t reduce_mod(long long value, std::size_t dim) {
  const long long d = static_cast<long long>(dim);
  long long r = value % d;
  if (r < 0) r += d;
  return static_cast<std::size_t>(r);
}

}  // namespace

cdouble root_of_unity(std::size_t dim) {
  check_dim(dim);
  return std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(dim));
}

cdouble root_of_unity_power(std::size_t dim, long long power) {
  check_dim(dim);
  const std::size_t p = reduce_mod(power, dim);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) /
                             static_cast<double>(dim));
}

ComplexMatrix pauli_x(std::size_t dim) {
  check_dim(dim);
  ComplexMatrix x(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) x((j + 1) % dim, j) = 1.0;
  return x;
}

ComplexMatrix pauli_z(std::size_t dim) {
  check_dim(dim);
  ComplexMatrix z(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    z(j, j) = root_of_unity_power(dim, static_cast<long long>(j));
  return z;
}

ComplexMatrix generalized_pauli(std::size_t dim, long long shift_power,
                                long long phase_power) {
  check_dim(dim);
  const std::size_t a = reduce_mod(shift_power, dim);
  // (X^a Z^b)|j> = omega^{jb} |j + a>, so column j holds a single entry.
  ComplexMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    m((j + a) % dim, j) =
        root_of_unity_power(dim, phase_power * static_cast<long long>(j));
  return m;
}

ComplexMatrix fourier_matrix(std::size_t dim) {
  check_dim(dim);
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      h(i, j) = inv_sqrt * root_of_unity_power(
                               dim, -static_cast<long long>(i) *
                                        static_cast<long long>(j));
  return h;
}

PureState rotated_basis_state(std::size_t dim, std::size_t index) {
  check_dim(dim);
  if (index >= dim)
    throw std::invalid_argument("rotated_basis_state: index out of range");
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cdouble> amps(dim);
  for (std::size_t j = 0; j < dim; ++j)
    amps[j] = inv_sqrt * root_of_unity_power(
                             dim, -static_cast<long long>(index) *
                                      static_cast<long long>(j));
  return PureState(std::move(amps));
}

}  // namespace quditphase
