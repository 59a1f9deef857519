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

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quditphase/algebra.hpp"
#include "quditphase/channels.hpp"
#include "quditphase/codes.hpp"
#include "quditphase/fidelity.hpp"
#include "quditphase/recovery.hpp"
#include "quditphase/verify.hpp"

namespace py = pybind11;
using namespace quditphase;

namespace {

py::array_t<cdouble> to_array(const ComplexMatrix& m) {
  py::array_t<cdouble> out({m.rows(), m.cols()});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

py::array_t<cdouble> to_array(const PureState& s) {
  // Shape-container form: the 1-d count constructor leaves the strides
  // uninitialized on older pybind11 releases.
  py::array_t<cdouble> out({static_cast<py::ssize_t>(s.dim())});
  std::copy(s.amplitudes().begin(), s.amplitudes().end(), out.mutable_data());
  return out;
}

ComplexMatrix matrix_from(py::array_t<cdouble, py::array::c_style |
                                                   py::array::forcecast> arr) {
  if (arr.ndim() != 2)
    throw py::value_error("expected a 2-d complex array");
  ComplexMatrix m(static_cast<std::size_t>(arr.shape(0)),
                  static_cast<std::size_t>(arr.shape(1)));
  std::copy(arr.data(), arr.data() + arr.size(), m.data().begin());
  return m;
}

DensityMatrix density_from(py::array_t<cdouble, py::array::c_style |
                                                    py::array::forcecast>
                               arr) {
  return DensityMatrix(matrix_from(std::move(arr)));
}

ChannelKind kind_from(const std::string& name) {
  if (name == "conventional") return ChannelKind::conventional;
  if (name == "weyl") return ChannelKind::weyl;
  throw py::value_error("channel must be 'conventional' or 'weyl'");
}

ChannelSpec spec_from(const std::string& name, double eta) {
  return {kind_from(name), eta};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal qudit codes for a qubit under phase damping";

  // Operator constructions.
  m.def("root_of_unity", &root_of_unity, py::arg("dim"));
  m.def("pauli_x", [](std::size_t dim) { return to_array(pauli_x(dim)); },
        py::arg("dim"));
  m.def("pauli_z", [](std::size_t dim) { return to_array(pauli_z(dim)); },
        py::arg("dim"));
  m.def("generalized_pauli",
        [](std::size_t dim, long long a, long long b) {
          return to_array(generalized_pauli(dim, a, b));
        },
        py::arg("dim"), py::arg("shift_power"), py::arg("phase_power"));
  m.def("fourier_matrix",
        [](std::size_t dim) { return to_array(fourier_matrix(dim)); },
        py::arg("dim"));

  // Codes.
  m.def("code_dimension", &code_dimension, py::arg("k"));
  m.def("amplitude_codewords", [](std::size_t k) {
    const auto [c0, c1] = amplitude_codewords(k);
    return py::make_tuple(to_array(c0), to_array(c1));
  });
  m.def("phase_codewords", [](std::size_t k) {
    const auto [c0, c1] = phase_codewords(k);
    return py::make_tuple(to_array(c0), to_array(c1));
  });
  m.def("rotated_codewords", [](std::size_t k) {
    const auto [c0, c1] = rotated_codewords(k);
    return py::make_tuple(to_array(c0), to_array(c1));
  });
  m.def("logical_flip",
        [](std::size_t k) { return to_array(logical_flip(k)); });
  m.def("logical_phase",
        [](std::size_t k) { return to_array(logical_phase(k)); });
  m.def("encode_logical",
        [](std::size_t k, double theta, double phi) {
          return to_array(encode_logical(k, theta, phi));
        },
        py::arg("k"), py::arg("theta"), py::arg("phi"));
  m.def("omega_coefficients",
        [](double theta, double phi, std::size_t dim) {
          return to_array(omega_coefficients(theta, phi, dim));
        },
        py::arg("theta"), py::arg("phi"), py::arg("dim"));

  // Channels.
  m.def("damping_factor",
        [](const std::string& kind, double eta, std::size_t dim,
           long long diff) {
          return damping_factor(spec_from(kind, eta), dim, diff);
        },
        py::arg("channel"), py::arg("eta"), py::arg("dim"), py::arg("diff"));
  m.def("apply_channel",
        [](const std::string& kind, double eta,
           py::array_t<cdouble, py::array::c_style | py::array::forcecast>
               rho) {
          return to_array(
              apply_closed_form(spec_from(kind, eta), density_from(rho))
                  .matrix());
        },
        py::arg("channel"), py::arg("eta"), py::arg("rho"));
  m.def("weyl_kraus_operators",
        [](double eta, std::size_t dim) {
          py::list out;
          for (const auto& e : weyl_kraus_operators(eta, dim))
            out.append(to_array(e));
          return out;
        },
        py::arg("eta"), py::arg("dim"));
  m.def("conventional_kraus_operators",
        [](double eta, std::size_t dim, std::size_t i_max) {
          py::list out;
          for (const auto& e : conventional_kraus_operators(eta, dim, i_max))
            out.append(to_array(e));
          return out;
        },
        py::arg("eta"), py::arg("dim"), py::arg("i_max") = 60);
  m.def("conventional_kraus_tail_bound", &conventional_kraus_tail_bound,
        py::arg("eta"), py::arg("dim"), py::arg("i_max"));

  // Recovery.
  m.def("recovery_map_amplitude",
        [](py::array_t<cdouble, py::array::c_style | py::array::forcecast>
               rho,
           std::size_t k) {
          return to_array(recovery_map_amplitude(density_from(rho), k)
                              .matrix());
        },
        py::arg("rho"), py::arg("k"));
  m.def("recovery_map_phase",
        [](py::array_t<cdouble, py::array::c_style | py::array::forcecast>
               rho,
           std::size_t k) {
          return to_array(recovery_map_phase(density_from(rho), k).matrix());
        },
        py::arg("rho"), py::arg("k"));
  m.def("recovery_kernel", &recovery_kernel, py::arg("diff"), py::arg("dim"));
  m.def("recovery_unitary",
        [](std::size_t k) { return to_array(recovery_unitary(k)); });

  // Fidelities.
  m.def("f_damp_state",
        [](std::size_t k, const std::string& kind, double eta, double theta,
           double phi) {
          return f_damp_state(k, spec_from(kind, eta), theta, phi);
        },
        py::arg("k"), py::arg("channel"), py::arg("eta"), py::arg("theta"),
        py::arg("phi"));
  m.def("f_rec_state",
        [](std::size_t k, const std::string& kind, double eta, double theta,
           double phi) {
          return f_rec_state(k, spec_from(kind, eta), theta, phi);
        },
        py::arg("k"), py::arg("channel"), py::arg("eta"), py::arg("theta"),
        py::arg("phi"));
  m.def("f_damp_avg",
        [](std::size_t dim, const std::string& kind, double eta) {
          return f_damp_avg(dim, spec_from(kind, eta));
        },
        py::arg("dim"), py::arg("channel"), py::arg("eta"));
  m.def("f_rec_avg",
        [](std::size_t dim, const std::string& kind, double eta) {
          return f_rec_avg(dim, spec_from(kind, eta));
        },
        py::arg("dim"), py::arg("channel"), py::arg("eta"));
  m.def("repetition_fidelity", &repetition_fidelity, py::arg("n"),
        py::arg("eta"));
  m.def("repetition_n_for_dim", &repetition_n_for_dim, py::arg("dim"));
  m.def("bloch_average",
        [](const std::function<double(double, double)>& f, int polar,
           int azimuthal) {
          return bloch_average(f, QuadratureOrders{polar, azimuthal});
        },
        py::arg("f"), py::arg("polar") = 8, py::arg("azimuthal") = 16);

  // Sweeps.
  py::class_<SweepRecord>(m, "SweepRecord")
      .def_property_readonly(
          "channel", [](const SweepRecord& r) { return to_string(r.kind); })
      .def_readonly("code", &SweepRecord::code)
      .def_readonly("eta", &SweepRecord::eta)
      .def_readonly("f_damp", &SweepRecord::f_damp)
      .def_readonly("f_rec", &SweepRecord::f_rec)
      .def("__repr__", [](const SweepRecord& r) {
        return "SweepRecord(" + to_string(r.kind) + ", " + r.code +
               ", eta=" + std::to_string(r.eta) + ")";
      });
  m.def("run_sweep",
        [](const std::vector<std::string>& channels,
           const std::vector<std::size_t>& dims,
           const std::vector<double>& etas, bool include_repetition) {
          SweepConfig config;
          config.kinds.clear();
          for (const auto& name : channels)
            config.kinds.push_back(kind_from(name));
          config.dims = dims;
          config.etas = etas;
          config.include_repetition = include_repetition;
          return run_sweep(config);
        },
        py::arg("channels") =
            std::vector<std::string>{"conventional", "weyl"},
        py::arg("dims") = std::vector<std::size_t>{2, 6, 18, 30},
        py::arg("etas") = eta_grid(0.0, 1.0, 101),
        py::arg("include_repetition") = true);
  m.def("eta_grid", &eta_grid, py::arg("eta_min"), py::arg("eta_max"),
        py::arg("steps"));

  // Verification.
  m.def("verification_suite_names",
        [] { return verification_suite_names(); });
  m.def("run_verification_suite", [](const std::string& name) {
    const SuiteResult r = run_verification_suite(name);
    py::dict out;
    out["name"] = r.name;
    out["passed"] = r.passed;
    out["max_relative"] = r.max_relative;
    out["worst_absolute"] = r.worst_absolute;
    out["detail"] = r.detail;
    return out;
  });
}
