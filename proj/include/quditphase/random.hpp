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

#include <random>

#include "quditphase/matrix.hpp"

namespace quditphase {

/// Haar-ish random pure state: normalized vector of iid complex normals.
inline PureState random_pure_state(std::mt19937& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  std::vector<cdouble> amps(dim);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = {normal(rng), normal(rng)};
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return PureState(std::move(amps));
}

/// Random full-rank density matrix rho = A A^dagger / tr(A A^dagger) with
/// A a complex Ginibre matrix.
inline DensityMatrix random_density_matrix(std::mt19937& rng,
                                           std::size_t dim) {
  std::normal_distribution<double> normal;
  ComplexMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      a(i, j) = {normal(rng), normal(rng)};
  ComplexMatrix rho = a * a.adjoint();
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  // Symmetrize away the last bits of roundoff.
  ComplexMatrix herm = rho.adjoint();
  herm += rho;
  herm *= 0.5;
  return DensityMatrix(std::move(herm));
}

/// Random normalized pair (alpha, beta) for two-codeword superpositions.
inline std::pair<cdouble, cdouble> random_amplitude_pair(std::mt19937& rng) {
  std::normal_distribution<double> normal;
  cdouble alpha{normal(rng), normal(rng)};
  cdouble beta{normal(rng), normal(rng)};
  const double inv =
      1.0 / std::sqrt(std::norm(alpha) + std::norm(beta));
  return {alpha * inv, beta * inv};
}

}  // namespace quditphase
