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

#include "quditphase/recovery.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quditphase/algebra.hpp"
#include "quditphase/codes.hpp"

namespace quditphase {

namespace {

std::size_t wrap(long long value, std::size_t modulus) {
  const long long m = static_cast<long long>(modulus);
  long long r = value % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

void check_code_dim(const DensityMatrix& rho, std::size_t k) {
  if (rho.dim() != code_dimension(k))
    throw std::invalid_argument("recovery map: density matrix dimension "
                                "does not match code dimension 4k+2");
}

}  // namespace

const ComplexMatrix& SyndromeProjectorSet::projector(int s) const {
  const int kk = static_cast<int>(k);
  if (s < -kk || s > kk)
    throw std::invalid_argument("syndrome label outside [-k, k]");
  return projectors[static_cast<std::size_t>(s + kk)];
}

SyndromeProjectorSet syndrome_projectors(std::size_t k) {
  const std::size_t dim = code_dimension(k);
  SyndromeProjectorSet set{k, dim, {}};
  set.projectors.reserve(2 * k + 1);
  for (long long s = -static_cast<long long>(k);
       s <= static_cast<long long>(k); ++s) {
    ComplexMatrix p(dim, dim);
    const std::size_t a = wrap(s, dim);
    const std::size_t b = wrap(static_cast<long long>(2 * k + 1) + s, dim);
    p(a, a) = 1.0;
    p(b, b) = 1.0;
    set.projectors.push_back(std::move(p));
  }
  return set;
}

ComplexMatrix syndrome_unitary(std::size_t k) {
  const std::size_t dim = code_dimension(k);
  const std::size_t adim = 2 * k + 1;
  const auto set = syndrome_projectors(k);
  ComplexMatrix n(dim * adim, dim * adim);
  for (long long s = -static_cast<long long>(k);
       s <= static_cast<long long>(k); ++s) {
    const ComplexMatrix& p = set.projector(static_cast<int>(s));
    // X_A^s: ancilla column a maps to row a + s (mod 2k+1).
    for (std::size_t i = 0; i < dim; ++i) {
      if (p(i, i) == cdouble{0.0, 0.0}) continue;
      for (std::size_t a = 0; a < adim; ++a) {
        const std::size_t a_out = wrap(static_cast<long long>(a) + s, adim);
        n(i * adim + a_out, i * adim + a) = 1.0;
      }
    }
  }
  return n;
}

ComplexMatrix correction_unitary(std::size_t k) {
  const std::size_t dim = code_dimension(k);
  const std::size_t adim = 2 * k + 1;
  ComplexMatrix c(dim * adim, dim * adim);
  for (long long s = -static_cast<long long>(k);
       s <= static_cast<long long>(k); ++s) {
    const std::size_t a = wrap(s, adim);
    // X^{-s}: system column j maps to row j - s (mod D).
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t j_out = wrap(static_cast<long long>(j) - s, dim);
      c(j_out * adim + a, j * adim + a) = 1.0;
    }
  }
  return c;
}

ComplexMatrix recovery_unitary(std::size_t k) {
  return correction_unitary(k) * syndrome_unitary(k);
}

DensityMatrix recovery_map_amplitude(const DensityMatrix& rho, std::size_t k) {
  check_code_dim(rho, k);
  const std::size_t dim = rho.dim();
  const std::array<std::size_t, 2> support{0, 2 * k + 1};
  ComplexMatrix out(dim, dim);
  for (std::size_t x : support)
    for (std::size_t y : support) {
      cdouble phi = 0.0;
      for (long long s = -static_cast<long long>(k);
           s <= static_cast<long long>(k); ++s)
        phi += rho.entry(wrap(static_cast<long long>(x) + s, dim),
                         wrap(static_cast<long long>(y) + s, dim));
      out(x, y) = phi;
    }
  return DensityMatrix(std::move(out));
}

double recovery_kernel(long long diff, std::size_t dim) {
  if (dim < 2 || dim % 4 != 2)
    throw std::invalid_argument("recovery_kernel: dimension must be 4k+2");
  const long long k = (static_cast<long long>(dim) - 2) / 4;
  cdouble sum = 0.0;
  for (long long s = -k; s <= k; ++s)
    sum += root_of_unity_power(dim, s * diff);
  if (std::abs(sum.imag()) > 1e-13)
    throw std::runtime_error("recovery_kernel: non-real kernel sum");
  return sum.real();
}

double recovery_kernel_closed_form(long long diff, std::size_t dim) {
  if (dim < 2 || dim % 4 != 2)
    throw std::invalid_argument("recovery_kernel_closed_form: dimension must be 4k+2");
  const long long d_mod = diff % static_cast<long long>(dim);
  if (d_mod == 0) return static_cast<double>(dim) / 2.0;  // 2k+1
  const double d = static_cast<double>(diff);
  return std::sin(std::numbers::pi * d / 2.0) /
         std::sin(std::numbers::pi * d / static_cast<double>(dim));
}

RecoveryKernel::RecoveryKernel(std::size_t dim_) : dim(dim_) {
  values.reserve(2 * dim - 1);
  for (long long d = -(static_cast<long long>(dim) - 1);
       d <= static_cast<long long>(dim) - 1; ++d)
    values.push_back(recovery_kernel(d, dim));
}

std::array<cdouble, 4> phase_recovery_coefficients(const DensityMatrix& rho,
                                                   std::size_t k) {
  check_code_dim(rho, k);
  const std::size_t dim = rho.dim();
  const RecoveryKernel kernel(dim);
  const std::array<std::size_t, 2> support{0, 2 * k + 1};
  std::array<cdouble, 4> phi{};
  std::size_t idx = 0;
  for (std::size_t x : support)
    for (std::size_t y : support) {
      cdouble acc = 0.0;
      for (std::size_t l = 0; l < dim; ++l)
        for (std::size_t m = 0; m < dim; ++m) {
          const double delta = kernel.at(static_cast<long long>(l) -
                                         static_cast<long long>(m));
          if (delta == 0.0) continue;
          // (-1)^{x l - y m}; x, y are 0 or the odd integer 2k+1, so only
          // the parity of x l + y m matters.
          const double sign = ((x * l + y * m) % 2 == 0) ? 1.0 : -1.0;
          acc += rho.entry(l, m) * sign * delta;
        }
      phi[idx++] = acc / static_cast<double>(dim);
    }
  return phi;
}

DensityMatrix recovery_map_phase(const DensityMatrix& rho, std::size_t k) {
  const std::size_t dim = rho.dim();
  const auto phi = phase_recovery_coefficients(rho, k);
  const auto [plus, minus] = phase_codewords(k);
  const std::array<const PureState*, 2> basis{&plus, &minus};
  ComplexMatrix out(dim, dim);
  std::size_t idx = 0;
  for (const PureState* xs : basis)
    for (const PureState* ys : basis) {
      const cdouble coeff = phi[idx++];
      if (coeff == cdouble{0.0, 0.0}) continue;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          out(i, j) += coeff * (*xs)[i] * std::conj((*ys)[j]);
    }
  return DensityMatrix(std::move(out), 1e-11);
}

DensityMatrix recover_rotated_codeword_check(std::size_t k, int u,
                                             const ChannelSpec& spec,
                                             double tol) {
  if (u != 0 && u != 1)
    throw std::invalid_argument("rotated codeword index must be 0 or 1");
  const auto [zeta0, zeta1] = rotated_codewords(k);
  const PureState& zeta = (u == 0) ? zeta0 : zeta1;
  const DensityMatrix input = DensityMatrix::pure(zeta);
  const DensityMatrix damped = apply_closed_form(spec, input);
  const auto phi = phase_recovery_coefficients(damped, k);
  const double sign = (u == 0) ? 1.0 : -1.0;
  const std::array<cdouble, 4> expected{0.5, sign * 0.5, sign * 0.5, 0.5};
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(phi[i] - expected[i]) > tol)
      throw std::runtime_error(
          "recover_rotated_codeword_check: recovery coefficient differs "
          "from the signed half");
  DensityMatrix recovered = recovery_map_phase(damped, k);
  if (max_abs_diff(recovered.matrix(), input.matrix()) > tol)
    throw std::runtime_error(
        "recover_rotated_codeword_check: rotated codeword not restored");
  return recovered;
}

}  // namespace quditphase
