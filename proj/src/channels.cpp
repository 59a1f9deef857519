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

#include "quditphase/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "quditphase/algebra.hpp"

namespace quditphase {

namespace {

// Complex exponentiation by squaring for non-negative integer powers.
cdouble ipow(cdouble base, std::size_t exponent) {
  cdouble result{1.0, 0.0};
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace

std::string to_string(ChannelKind kind) {
  return kind == ChannelKind::conventional ? "conventional" : "weyl";
}

ChannelSpec::ChannelSpec(ChannelKind kind_, double eta_)
    : kind(kind_), eta(eta_) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("ChannelSpec: eta must lie in [0, 1]");
}

double eta_from_gamma(double gamma) {
  if (gamma < 0.0)
    throw std::domain_error("eta_from_gamma: gamma must be non-negative");
  return std::exp(-gamma);
}

cdouble damping_factor(const ChannelSpec& spec, std::size_t dim,
                       long long diff) {
  if (diff == 0) return {1.0, 0.0};
  if (spec.kind == ChannelKind::conventional) {
    const double d = static_cast<double>(diff);
    return {std::pow(spec.eta, d * d), 0.0};
  }
  const cdouble base = 0.5 * (1.0 - spec.eta) * root_of_unity_power(dim, diff) +
                       0.5 * (1.0 + spec.eta);
  return ipow(base, dim - 1);
}

DensityMatrix apply_closed_form(const ChannelSpec& spec,
                                const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  ComplexMatrix out(dim, dim);
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t m = 0; m < dim; ++m)
      out(l, m) = rho.entry(l, m) *
                  damping_factor(spec, dim,
                                 static_cast<long long>(l) -
                                     static_cast<long long>(m));
  return DensityMatrix(std::move(out));
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  double result = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    result *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return result;
}

std::vector<ComplexMatrix> weyl_kraus_operators(double eta, std::size_t dim) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("weyl_kraus_operators: eta must lie in [0, 1]");
  const double p = 0.5 * (1.0 - eta);
  const double q = 0.5 * (1.0 + eta);
  std::vector<ComplexMatrix> ops;
  ops.reserve(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    const double weight = binomial(dim - 1, m) * std::pow(p, m) *
                          std::pow(q, dim - 1 - m);
    ComplexMatrix e = generalized_pauli(dim, 0, static_cast<long long>(m));
    e *= std::sqrt(weight);
    ops.push_back(std::move(e));
  }
  return ops;
}

std::vector<ComplexMatrix> conventional_kraus_operators(double eta,
                                                        std::size_t dim,
                                                        std::size_t i_max) {
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::domain_error(
        "conventional_kraus_operators: eta = 0 is unsupported (-2 ln eta "
        "diverges); use apply_closed_form for the eta = 0 limit");
  if (dim < 2)
    throw std::invalid_argument("qudit dimension must be at least 2");
  const double x = std::sqrt(-2.0 * std::log(eta));
  std::vector<ComplexMatrix> ops;
  ops.reserve(i_max + 1);
  // coeff[j] tracks [j x]^i / sqrt(i!) across iterations.
  std::vector<double> coeff(dim, 1.0);
  for (std::size_t i = 0; i <= i_max; ++i) {
    ComplexMatrix e(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const double jj = static_cast<double>(j) * static_cast<double>(j);
      e(j, j) = coeff[j] * std::pow(eta, jj);
    }
    ops.push_back(std::move(e));
    for (std::size_t j = 0; j < dim; ++j)
      coeff[j] *= static_cast<double>(j) * x / std::sqrt(static_cast<double>(i + 1));
  }
  return ops;
}

namespace {

// P[Poisson(lambda) > i_max], summed in log space from the mode outward.
double poisson_upper_tail(double lambda, std::size_t i_max) {
  if (lambda <= 0.0) return 0.0;
  // log pmf(i) = -lambda + i log lambda - lgamma(i+1)
  const double log_lambda = std::log(lambda);
  double tail = 0.0;
  // Sum the complement when the mean is far above the cut; otherwise sum
  // the tail directly until the terms are negligible.
  if (lambda > static_cast<double>(i_max) + 6.0 * std::sqrt(lambda) + 10.0)
    return 1.0;  // essentially all mass above the cut
  double log_term = -lambda + static_cast<double>(i_max + 1) * log_lambda -
                    std::lgamma(static_cast<double>(i_max + 2));
  double term = std::exp(log_term);
  for (std::size_t i = i_max + 1; term > 0.0 && i < i_max + 400000; ++i) {
    tail += term;
    term *= lambda / static_cast<double>(i + 1);
    if (term < tail * 1e-18 && term < 1e-300) break;
  }
  return std::min(tail, 1.0);
}

}  // namespace

double conventional_kraus_tail_bound(double eta, std::size_t dim,
                                     std::size_t i_max) {
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::domain_error("conventional_kraus_tail_bound: eta must lie in (0, 1]");
  if (eta == 1.0) return 0.0;
  const double x = -2.0 * std::log(eta);
  double bound = 0.0;
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t m = 0; m <= l; ++m) {
      const double lambda = static_cast<double>(l) * static_cast<double>(m) * x;
      const double diff = static_cast<double>(l) - static_cast<double>(m);
      const double scale = std::pow(eta, diff * diff);
      bound = std::max(bound, scale * poisson_upper_tail(lambda, i_max));
    }
  return bound;
}

std::size_t conventional_kraus_terms_for(double eta, std::size_t dim,
                                         double tol) {
  std::size_t lo = 0;
  std::size_t hi = 64;
  while (conventional_kraus_tail_bound(eta, dim, hi) > tol) {
    lo = hi;
    hi *= 2;
    if (hi > (1u << 22))
      throw std::runtime_error("conventional_kraus_terms_for: tolerance unreachable");
  }
  while (lo + 1 < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (conventional_kraus_tail_bound(eta, dim, mid) > tol)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

DensityMatrix apply_kraus(std::span<const ComplexMatrix> kraus,
                          const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  ComplexMatrix out(dim, dim);
  for (const auto& e : kraus) {
    if (!e.is_square() || e.rows() != dim)
      throw std::invalid_argument("apply_kraus: operator dimension mismatch");
    out += e * rho.matrix() * e.adjoint();
  }
  return DensityMatrix(std::move(out), 1e-11);
}

WeylWeights::WeylWeights(std::size_t dim_, std::vector<double> pi_)
    : dim(dim_), pi(std::move(pi_)) {
  if (pi.size() != dim * dim)
    throw std::invalid_argument("WeylWeights: need D x D probabilities");
  double sum = 0.0;
  for (double w : pi) {
    if (!(w >= 0.0 && w <= 1.0))
      throw std::invalid_argument("WeylWeights: entries must lie in [0, 1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("WeylWeights: probabilities must sum to 1");
}

DensityMatrix apply_general_weyl(const WeylWeights& weights,
                                 const DensityMatrix& rho) {
  if (weights.dim != rho.dim())
    throw std::invalid_argument("apply_general_weyl: dimension mismatch");
  const std::size_t dim = rho.dim();
  ComplexMatrix out(dim, dim);
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t n = 0; n < dim; ++n) {
      const double w = weights.at(m, n);
      if (w == 0.0) continue;
      const ComplexMatrix pauli =
          generalized_pauli(dim, static_cast<long long>(m),
                            static_cast<long long>(n));
      ComplexMatrix term = pauli * rho.matrix() * pauli.adjoint();
      term *= w;
      out += term;
    }
  return DensityMatrix(std::move(out), 1e-11);
}

}  // namespace quditphase
