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

#include <doctest.h>

#include <cmath>
#include <random>

#include "quditphase/algebra.hpp"
#include "quditphase/channels.hpp"
#include "quditphase/random.hpp"

using namespace quditphase;

TEST_CASE("damping factors") {
  CHECK(damping_factor(ChannelSpec(ChannelKind::conventional, 1.0), 6, 3) ==
        cdouble{1.0, 0.0});
  CHECK(std::abs(damping_factor(ChannelSpec(ChannelKind::conventional, 0.5),
                                6, 2) -
                 cdouble{0.0625, 0.0}) <= 1e-15);
  // At D = 2 the Weyl factor reduces to eta, matching the qubit phase flip.
  for (double eta : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    CHECK(std::abs(damping_factor(ChannelSpec(ChannelKind::weyl, eta), 2, 1) -
                   cdouble{eta, 0.0}) <= 1e-15);
    CHECK(std::abs(damping_factor(ChannelSpec(ChannelKind::weyl, eta), 2, -1) -
                   cdouble{eta, 0.0}) <= 1e-15);
  }
  // f(eta, 0) = 1 exactly for both kinds.
  for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
    CHECK(damping_factor(ChannelSpec(kind, 0.37), 10, 0) == cdouble{1.0, 0.0});
  // Weyl factor by direct binomial summation (independent of ipow).
  for (long long d : {1ll, 2ll, 5ll}) {
    const double eta = 0.35;
    const std::size_t dim = 6;
    cdouble direct = 0.0;
    for (std::size_t m = 0; m < dim; ++m)
      direct += binomial(dim - 1, m) * std::pow(0.5 * (1.0 - eta), m) *
                std::pow(0.5 * (1.0 + eta), dim - 1 - m) *
                root_of_unity_power(dim, static_cast<long long>(m) * d);
    CHECK(std::abs(damping_factor(ChannelSpec(ChannelKind::weyl, eta), dim,
                                  d) -
                   direct) <= 1e-14);
  }
  CHECK_THROWS_AS(ChannelSpec(ChannelKind::weyl, 1.5), std::domain_error);
  CHECK_THROWS_AS(ChannelSpec(ChannelKind::weyl, -0.1), std::domain_error);
}

TEST_CASE("closed-form channel action") {
  std::mt19937 rng(21);
  const DensityMatrix rho = random_density_matrix(rng, 6);

  SUBCASE("eta = 1 is the identity channel") {
    for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
      CHECK(max_abs_diff(
                apply_closed_form(ChannelSpec(kind, 1.0), rho).matrix(),
                rho.matrix()) <= 1e-14);
  }
  SUBCASE("conventional channel at eta = 0 keeps only the diagonal") {
    const DensityMatrix out =
        apply_closed_form(ChannelSpec(ChannelKind::conventional, 0.0), rho);
    for (std::size_t l = 0; l < 6; ++l)
      for (std::size_t m = 0; m < 6; ++m) {
        if (l == m)
          CHECK(std::abs(out.entry(l, m) - rho.entry(l, m)) <= 1e-15);
        else
          CHECK(std::abs(out.entry(l, m)) == 0.0);
      }
  }
  SUBCASE("diagonal states are fixed points of both kinds") {
    ComplexMatrix diag(6, 6);
    for (std::size_t j = 0; j < 6; ++j)
      diag(j, j) = (j + 1) / 21.0;
    const DensityMatrix fixed(diag);
    for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
      for (double eta : {0.0, 0.4, 1.0})
        CHECK(max_abs_diff(
                  apply_closed_form(ChannelSpec(kind, eta), fixed).matrix(),
                  fixed.matrix()) <= 1e-13);
  }
  SUBCASE("trace and Hermiticity are preserved") {
    for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
      for (double eta : {0.0, 0.3, 0.8}) {
        const DensityMatrix out =
            apply_closed_form(ChannelSpec(kind, eta), rho);
        CHECK(std::abs(out.matrix().trace() - cdouble{1.0, 0.0}) <= 1e-12);
        CHECK(is_hermitian(out.matrix(), 1e-12));
      }
  }
}

TEST_CASE("Weyl Kraus operators") {
  SUBCASE("D = 2 reduces to the qubit pair") {
    const double eta = 0.42;
    const auto ops = weyl_kraus_operators(eta, 2);
    REQUIRE(ops.size() == 2);
    ComplexMatrix e0 = ComplexMatrix::identity(2);
    e0 *= std::sqrt(0.5 * (1.0 + eta));
    ComplexMatrix e1 = pauli_z(2);
    e1 *= std::sqrt(0.5 * (1.0 - eta));
    CHECK(max_abs_diff(ops[0], e0) <= 1e-15);
    CHECK(max_abs_diff(ops[1], e1) <= 1e-15);
  }
  SUBCASE("eta = 1 collapses the binomial weights") {
    const auto ops = weyl_kraus_operators(1.0, 6);
    CHECK(max_abs_diff(ops[0], ComplexMatrix::identity(6)) <= 1e-15);
    for (std::size_t m = 1; m < 6; ++m) CHECK(ops[m].max_abs() == 0.0);
  }
  SUBCASE("completeness and closed-form agreement") {
    std::mt19937 rng(22);
    for (std::size_t dim : {2u, 6u, 13u, 30u}) {
      for (double eta : {0.0, 0.3, 0.8, 1.0}) {
        const auto ops = weyl_kraus_operators(eta, dim);
        ComplexMatrix sum(dim, dim);
        for (const auto& e : ops) sum += e.adjoint() * e;
        CHECK(max_abs_diff(sum, ComplexMatrix::identity(dim)) <= 1e-12);
        const DensityMatrix rho = random_density_matrix(rng, dim);
        CHECK(max_abs_diff(
                  apply_kraus(ops, rho).matrix(),
                  apply_closed_form(ChannelSpec(ChannelKind::weyl, eta), rho)
                      .matrix()) <= 1e-12);
      }
    }
  }
}

TEST_CASE("conventional Kraus family") {
  SUBCASE("eta = 1 leaves only the identity operator") {
    const auto ops = conventional_kraus_operators(1.0, 6, 10);
    CHECK(max_abs_diff(ops[0], ComplexMatrix::identity(6)) <= 1e-15);
    for (std::size_t i = 1; i < ops.size(); ++i)
      CHECK(ops[i].max_abs() == 0.0);
  }
  SUBCASE("qubit operators match the explicit form") {
    const double eta = 0.6;
    const double x = std::sqrt(-2.0 * std::log(eta));
    const auto ops = conventional_kraus_operators(eta, 2, 8);
    double fact = 1.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i > 0) fact *= static_cast<double>(i);
      const double expected0 = (i == 0) ? 1.0 : 0.0;
      const double expected1 = eta * std::pow(x, i) / std::sqrt(fact);
      CHECK(std::abs(ops[i](0, 0) - cdouble{expected0, 0.0}) <= 1e-14);
      CHECK(std::abs(ops[i](1, 1) - cdouble{expected1, 0.0}) <= 1e-13);
      CHECK(std::abs(ops[i](0, 1)) == 0.0);
    }
  }
  SUBCASE("eta = 0 is rejected toward the closed form") {
    CHECK_THROWS_WITH_AS(conventional_kraus_operators(0.0, 6, 10),
                         doctest::Contains("apply_closed_form"),
                         std::domain_error);
  }
  SUBCASE("truncation error obeys the tail bound; adequate truncation "
          "reaches the closed form") {
    std::mt19937 rng(23);
    for (std::size_t dim : {2u, 6u, 10u}) {
      for (double eta : {0.1, 0.3, 0.55, 0.9}) {
        const ChannelSpec spec(ChannelKind::conventional, eta);
        const DensityMatrix rho = random_density_matrix(rng, dim);
        const DensityMatrix exact = apply_closed_form(spec, rho);

        const auto at60 = conventional_kraus_operators(eta, dim, 60);
        const double dev60 =
            max_abs_diff(apply_kraus(at60, rho).matrix(), exact.matrix());
        CHECK(dev60 <=
              conventional_kraus_tail_bound(eta, dim, 60) + 1e-12);

        const std::size_t enough =
            conventional_kraus_terms_for(eta, dim, 1e-11);
        const auto full = conventional_kraus_operators(eta, dim, enough);
        CHECK(max_abs_diff(apply_kraus(full, rho).matrix(), exact.matrix()) <=
              1e-10);
      }
    }
    // The truncated family is badly wrong at strong damping: frozen from
    // the measured tail (the Poisson mass above i = 60 at rate 60.2).
    std::mt19937 rng2(24);
    const DensityMatrix rho = random_density_matrix(rng2, 6);
    const auto at60 = conventional_kraus_operators(0.3, 6, 60);
    const double dev = max_abs_diff(
        apply_kraus(at60, rho).matrix(),
        apply_closed_form(ChannelSpec(ChannelKind::conventional, 0.3), rho)
            .matrix());
    CHECK(dev > 1e-3);
  }
  SUBCASE("completeness defect decreases monotonically in i_max") {
    const double eta = 0.5;
    const std::size_t dim = 6;
    double last = 1e300;
    for (std::size_t i_max : {0u, 3u, 10u, 30u, 80u, 160u}) {
      const auto ops = conventional_kraus_operators(eta, dim, i_max);
      ComplexMatrix sum(dim, dim);
      for (const auto& e : ops) sum += e.adjoint() * e;
      const double defect =
          max_abs_diff(sum, ComplexMatrix::identity(dim));
      CHECK(defect <= last + 1e-15);
      last = defect;
    }
    CHECK(last <= 1e-12);
  }
}

TEST_CASE("apply_kraus basics") {
  std::mt19937 rng(25);
  const DensityMatrix rho = random_density_matrix(rng, 4);
  const std::vector<ComplexMatrix> ident{ComplexMatrix::identity(4)};
  CHECK(max_abs_diff(apply_kraus(ident, rho).matrix(), rho.matrix()) <=
        1e-15);

  const std::vector<ComplexMatrix> empty;
  const DensityMatrix zero = apply_kraus(empty, rho);
  CHECK(zero.matrix().max_abs() == 0.0);
  CHECK_FALSE(zero.is_trace_one());

  const std::vector<ComplexMatrix> wrong{ComplexMatrix::identity(3)};
  CHECK_THROWS_AS(apply_kraus(wrong, rho), std::invalid_argument);
}

TEST_CASE("general Weyl channel") {
  std::mt19937 rng(26);

  SUBCASE("identity weights leave the state unchanged") {
    const DensityMatrix rho = random_density_matrix(rng, 5);
    std::vector<double> pi(25, 0.0);
    pi[0] = 1.0;
    CHECK(max_abs_diff(apply_general_weyl(WeylWeights(5, pi), rho).matrix(),
                       rho.matrix()) <= 1e-13);
  }
  SUBCASE("binomial weights on the Z column reproduce the Weyl channel") {
    for (std::size_t dim : {2u, 6u}) {
      const double eta = 0.45;
      const DensityMatrix rho = random_density_matrix(rng, dim);
      std::vector<double> pi(dim * dim, 0.0);
      for (std::size_t n = 0; n < dim; ++n)
        pi[n] = binomial(dim - 1, n) * std::pow(0.5 * (1.0 - eta), n) *
                std::pow(0.5 * (1.0 + eta), dim - 1 - n);
      CHECK(max_abs_diff(
                apply_general_weyl(WeylWeights(dim, pi), rho).matrix(),
                apply_closed_form(ChannelSpec(ChannelKind::weyl, eta), rho)
                    .matrix()) <= 1e-12);
    }
  }
  SUBCASE("the uniform twirl sends everything to the maximally mixed state") {
    const DensityMatrix rho = random_density_matrix(rng, 3);
    std::vector<double> pi(9, 1.0 / 9.0);
    CHECK(max_abs_diff(apply_general_weyl(WeylWeights(3, pi), rho).matrix(),
                       DensityMatrix::maximally_mixed(3).matrix()) <= 1e-12);
  }
  SUBCASE("invalid weights are rejected") {
    CHECK_THROWS_AS(WeylWeights(2, {0.5, 0.5, 0.5, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeylWeights(2, {1.5, -0.5, 0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeylWeights(2, {1.0}), std::invalid_argument);
  }
}

TEST_CASE("positivity spot check") {
  std::mt19937 rng(27);
  for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
    for (std::size_t dim : {2u, 6u, 10u})
      for (double eta : {0.0, 0.5, 1.0})
        for (int trial = 0; trial < 5; ++trial) {
          const DensityMatrix out = apply_closed_form(
              ChannelSpec(kind, eta), random_density_matrix(rng, dim));
          CHECK(min_eigenvalue(out.matrix()) >= -1e-9);
        }
}

TEST_CASE("eta from gamma") {
  CHECK(eta_from_gamma(0.0) == 1.0);
  CHECK(eta_from_gamma(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(eta_from_gamma(-1.0), std::domain_error);
}
