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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "quditphase/codes.hpp"
#include "quditphase/fidelity.hpp"
#include "quditphase/random.hpp"
#include "quditphase/recovery.hpp"

using namespace quditphase;

TEST_CASE("state fidelity basics") {
  std::mt19937 rng(41);
  const PureState psi = random_pure_state(rng, 6);
  CHECK(state_fidelity(psi, DensityMatrix::pure(psi)) ==
        doctest::Approx(1.0).epsilon(1e-13));

  const PureState e0 = PureState::basis(6, 0);
  const PureState e1 = PureState::basis(6, 1);
  CHECK(state_fidelity(e0, DensityMatrix::pure(e1)) == 0.0);
  CHECK(state_fidelity(psi, DensityMatrix::maximally_mixed(6)) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-13));

  CHECK_THROWS_AS(state_fidelity(PureState::basis(4, 0),
                                 DensityMatrix::maximally_mixed(6)),
                  std::invalid_argument);

  CHECK_THROWS_AS(BlochAngles(-0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(BlochAngles(0.5, 6.3), std::domain_error);
  CHECK_NOTHROW(BlochAngles(std::numbers::pi, 0.0));
}

TEST_CASE("damped fidelity of a logical state") {
  SUBCASE("eta = 1 keeps every state intact") {
    for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
      for (std::size_t k : {0u, 1u, 4u})
        CHECK(f_damp_state(k, ChannelSpec(kind, 1.0), 1.2, 2.3) ==
              doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("closed sum equals the matrix pipeline") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t k = rng() % 3;
      const ChannelKind kind =
          (rng() % 2 == 0) ? ChannelKind::conventional : ChannelKind::weyl;
      const ChannelSpec spec(kind, unit(rng));
      const double theta = std::numbers::pi * unit(rng);
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      const PureState input = logical_state(k, theta, phi);
      const double matrix_path = state_fidelity(
          input, apply_closed_form(spec, DensityMatrix::pure(input)));
      CHECK(f_damp_state(k, spec, theta, phi) ==
            doctest::Approx(matrix_path).epsilon(1e-12));
    }
  }
  SUBCASE("qubit values computed by the matrix oracle") {
    // theta = pi/2, phi = 0 encodes |0> at D = 2: unaffected by dephasing.
    for (double eta : {0.0, 0.5, 1.0})
      CHECK(f_damp_state(0, ChannelSpec(ChannelKind::conventional, eta),
                         std::numbers::pi / 2, 0.0) ==
            doctest::Approx(1.0).epsilon(1e-12));
    // theta = pi/3: F = (7 + eta)/8, from the Omega sums at D = 2.
    for (double eta : {0.0, 0.3, 0.8})
      CHECK(f_damp_state(0, ChannelSpec(ChannelKind::conventional, eta),
                         std::numbers::pi / 3, 0.0) ==
            doctest::Approx((7.0 + eta) / 8.0).epsilon(1e-12));
  }
  SUBCASE("the encoded zeta_0 is damped without recovery for D > 2") {
    CHECK(f_damp_state(1, ChannelSpec(ChannelKind::conventional, 0.5),
                       std::numbers::pi / 2, 0.0) < 1.0);
  }
}

TEST_CASE("averaged damped fidelity") {
  for (std::size_t dim : {2u, 6u, 18u, 30u})
    for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
      CHECK(f_damp_avg(dim, ChannelSpec(kind, 1.0)) ==
            doctest::Approx(1.0).epsilon(1e-13));

  for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl}) {
    CHECK(f_damp_avg(2, ChannelSpec(kind, 0.5)) ==
          doctest::Approx(2.5 / 3.0).epsilon(1e-13));
    for (double eta : {0.0, 0.25, 0.8})
      CHECK(f_damp_avg(2, ChannelSpec(kind, eta)) ==
            doctest::Approx((2.0 + eta) / 3.0).epsilon(1e-13));
    // Monotone decreasing in the dimension.
    const double f30 = f_damp_avg(30, ChannelSpec(kind, 0.5));
    const double f18 = f_damp_avg(18, ChannelSpec(kind, 0.5));
    const double f6 = f_damp_avg(6, ChannelSpec(kind, 0.5));
    const double f2 = f_damp_avg(2, ChannelSpec(kind, 0.5));
    CHECK(f30 <= f18);
    CHECK(f18 <= f6);
    CHECK(f6 <= f2);
  }
  CHECK_THROWS_AS(f_damp_avg(4, ChannelSpec(ChannelKind::weyl, 0.5)),
                  std::domain_error);
}

TEST_CASE("recovered fidelity of a logical state") {
  SUBCASE("strong conventional damping dephases the pole states to 1/2") {
    for (std::size_t k : {1u, 2u, 3u})
      CHECK(f_rec_state(k, ChannelSpec(ChannelKind::conventional, 0.0), 0.0,
                        0.0) == doctest::Approx(0.5).epsilon(1e-11));
  }
  SUBCASE("the rotated-codeword axis is exact for every k and eta") {
    for (std::size_t k = 0; k <= 5; ++k)
      for (double eta : {0.0, 0.3, 0.7, 1.0})
        for (ChannelKind kind :
             {ChannelKind::conventional, ChannelKind::weyl}) {
          const ChannelSpec spec(kind, eta);
          CHECK(f_rec_state(k, spec, std::numbers::pi / 2, 0.0) ==
                doctest::Approx(1.0).epsilon(1e-11));
          CHECK(f_rec_state(k, spec, -std::numbers::pi / 2, 0.0) ==
                doctest::Approx(1.0).epsilon(1e-11));
        }
  }
  SUBCASE("k = 0 recovery is a no-op") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      const ChannelKind kind =
          (rng() % 2 == 0) ? ChannelKind::conventional : ChannelKind::weyl;
      const ChannelSpec spec(kind, unit(rng));
      const double theta = std::numbers::pi * unit(rng);
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      CHECK(f_rec_state(0, spec, theta, phi) ==
            doctest::Approx(f_damp_state(0, spec, theta, phi))
                .epsilon(1e-12));
    }
  }
  SUBCASE("closed sum equals the recover-then-overlap pipeline") {
    std::mt19937 rng(44);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t k = rng() % 3;
      const ChannelKind kind =
          (rng() % 2 == 0) ? ChannelKind::conventional : ChannelKind::weyl;
      const ChannelSpec spec(kind, unit(rng));
      const double theta = std::numbers::pi * unit(rng);
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      const PureState input = logical_state(k, theta, phi);
      const DensityMatrix recovered = recovery_map_phase(
          apply_closed_form(spec, DensityMatrix::pure(input)), k);
      CHECK(f_rec_state(k, spec, theta, phi) ==
            doctest::Approx(state_fidelity(input, recovered))
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("averaged recovered fidelity") {
  for (std::size_t dim : {2u, 6u, 18u, 30u})
    for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
      CHECK(f_rec_avg(dim, ChannelSpec(kind, 1.0)) ==
            doctest::Approx(1.0).epsilon(1e-13));

  // D = 2: the kernel is identically 1 and recovery changes nothing.
  for (ChannelKind kind : {ChannelKind::conventional, ChannelKind::weyl})
    for (double eta : {0.0, 0.3, 0.9})
      CHECK(f_rec_avg(2, ChannelSpec(kind, eta)) ==
            doctest::Approx((2.0 + eta) / 3.0).epsilon(1e-13));

  // Conventional channel improves with dimension.
  for (double eta : {0.25, 0.5, 0.75}) {
    const ChannelSpec spec(ChannelKind::conventional, eta);
    CHECK(f_rec_avg(30, spec) > f_rec_avg(18, spec));
    CHECK(f_rec_avg(18, spec) > f_rec_avg(6, spec));
    CHECK(f_rec_avg(6, spec) > f_rec_avg(2, spec));
  }
}

TEST_CASE("repetition code fidelity") {
  for (double eta : eta_grid(0.0, 1.0, 21))
    CHECK(repetition_fidelity(1, eta) ==
          doctest::Approx((2.0 + eta) / 3.0).epsilon(1e-13));
  for (int n : {1, 3, 5}) {
    CHECK(repetition_fidelity(n, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    // eta = 0: binomial symmetry gives 1/2 + 1/6 = 2/3 for every odd n.
    CHECK(repetition_fidelity(n, 0.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(repetition_fidelity(2, 0.5), std::domain_error);
  CHECK_THROWS_AS(repetition_fidelity(0, 0.5), std::domain_error);
  CHECK_THROWS_AS(repetition_fidelity(3, 1.5), std::domain_error);

  CHECK(repetition_n_for_dim(2) == 1);
  CHECK(repetition_n_for_dim(6) == 3);
  CHECK(repetition_n_for_dim(8) == 3);
  CHECK(repetition_n_for_dim(10) == 5);
  CHECK(repetition_n_for_dim(18) == 5);
  CHECK(repetition_n_for_dim(30) == 5);
  CHECK(repetition_n_for_dim(32) == 5);
}

TEST_CASE("Bloch-sphere quadrature") {
  CHECK(bloch_average([](double, double) { return 0.7; }) ==
        doctest::Approx(0.7).epsilon(1e-13));
  CHECK(bloch_average([](double theta, double) {
          return std::cos(theta / 2.0) * std::cos(theta / 2.0);
        }) == doctest::Approx(0.5).epsilon(1e-12));
  // Quadrature reproduces the closed-form average.
  const ChannelSpec spec(ChannelKind::conventional, 0.5);
  CHECK(bloch_average([&](double theta, double phi) {
          return f_damp_state(1, spec, theta, phi);
        }) == doctest::Approx(f_damp_avg(6, spec)).epsilon(1e-8));
  const ChannelSpec weyl(ChannelKind::weyl, 0.35);
  CHECK(bloch_average([&](double theta, double phi) {
          return f_rec_state(1, weyl, theta, phi);
        }) == doctest::Approx(f_rec_avg(6, weyl)).epsilon(1e-8));
  CHECK_THROWS_AS(
      bloch_average([](double, double) { return 0.0; }, QuadratureOrders{0, 4}),
      std::invalid_argument);
}

TEST_CASE("eta grids") {
  const auto grid = eta_grid(0.0, 1.0, 101);
  REQUIRE(grid.size() == 101);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  CHECK(grid[50] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eta_grid(0.25, 0.25, 1) == std::vector<double>{0.25});
  CHECK_THROWS_AS(eta_grid(0.5, 0.4, 3), std::domain_error);
  CHECK_THROWS_AS(eta_grid(0.0, 1.0, 0), std::domain_error);
}

TEST_CASE("fidelity sweep") {
  SUBCASE("single point") {
    SweepConfig config;
    config.kinds = {ChannelKind::conventional};
    config.dims = {2};
    config.etas = {0.5};
    config.include_repetition = false;
    const auto records = run_sweep(config);
    REQUIRE(records.size() == 1);
    CHECK(records[0].code == "qudit-D2");
    CHECK(records[0].f_damp == doctest::Approx(2.5 / 3.0).epsilon(1e-13));
    CHECK(records[0].f_rec == doctest::Approx(2.5 / 3.0).epsilon(1e-13));
  }
  SUBCASE("default grid cardinality and labels") {
    SweepConfig config;
    config.etas = eta_grid(0.0, 1.0, 101);
    const auto records = run_sweep(config);
    std::size_t qudit_rows = 0;
    bool rep1 = false, rep3 = false, rep5 = false;
    for (const auto& r : records) {
      if (r.code.starts_with("qudit-")) ++qudit_rows;
      rep1 = rep1 || r.code == "rep-n1";
      rep3 = rep3 || r.code == "rep-n3";
      rep5 = rep5 || r.code == "rep-n5";
    }
    CHECK(qudit_rows == 808);  // 101 etas x 4 dims x 2 kinds
    CHECK(rep1);
    CHECK(rep3);
    CHECK(rep5);
    // Sorted by (kind, code, eta).
    const bool sorted = std::is_sorted(
        records.begin(), records.end(),
        [](const SweepRecord& a, const SweepRecord& b) {
          return std::tuple(to_string(a.kind), a.code, a.eta) <
                 std::tuple(to_string(b.kind), b.code, b.eta);
        });
    CHECK(sorted);
    // Bounds and the conventional no-harm property.
    for (const auto& r : records) {
      CHECK(r.f_damp >= -1e-10);
      CHECK(r.f_damp <= 1.0 + 1e-10);
      CHECK(r.f_rec >= -1e-10);
      CHECK(r.f_rec <= 1.0 + 1e-10);
      if (r.kind == ChannelKind::conventional &&
          r.code.starts_with("qudit-"))
        CHECK(r.f_rec >= r.f_damp - 1e-10);
    }
  }
  SUBCASE("repetition rows replicate per channel kind") {
    SweepConfig config;
    config.dims = {6};
    config.etas = {0.5};
    const auto records = run_sweep(config);
    std::size_t rep_rows = 0;
    for (const auto& r : records)
      if (r.code == "rep-n3") {
        ++rep_rows;
        CHECK(r.f_rec == doctest::Approx(repetition_fidelity(3, 0.5))
                             .epsilon(1e-14));
        CHECK(r.f_damp ==
              doctest::Approx((2.0 + 0.5) / 3.0).epsilon(1e-13));
      }
    CHECK(rep_rows == 2);
  }
  SUBCASE("invalid dimension is rejected") {
    SweepConfig config;
    config.dims = {7};
    config.etas = {0.5};
    CHECK_THROWS_AS(run_sweep(config), std::domain_error);
  }
}

TEST_CASE("Weyl regime relations behind the figure-3b curves") {
  const ChannelSpec weak(ChannelKind::weyl, 0.9);
  CHECK(f_rec_avg(18, weak) > repetition_fidelity(3, 0.9));
  CHECK(f_rec_avg(30, weak) > repetition_fidelity(5, 0.9));
  CHECK(f_rec_avg(6, weak) < repetition_fidelity(3, 0.9));
  const ChannelSpec strong(ChannelKind::weyl, 0.3);
  CHECK(f_rec_avg(30, strong) < f_damp_avg(2, strong));
}
