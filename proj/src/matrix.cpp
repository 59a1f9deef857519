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

#include "quditphase/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quditphase {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

cdouble ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix not square");
  cdouble t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cdouble a = lhs(i, k);
      if (a == cdouble{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::vector<cdouble> ComplexMatrix::apply(std::span<const cdouble> vec) const {
  if (cols_ != vec.size())
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<cdouble> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    cdouble acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * vec[j];
    out[i] = acc;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         max_abs_diff(a, b) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(m * m.adjoint(), ComplexMatrix::identity(m.rows())) <=
         tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(m, m.adjoint()) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cdouble aij = a(i, j);
      if (aij == cdouble{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace_ancilla(const ComplexMatrix& joint,
                                    std::size_t dim_system,
                                    std::size_t dim_ancilla) {
  const std::size_t n = dim_system * dim_ancilla;
  if (!joint.is_square() || joint.rows() != n)
    throw std::invalid_argument(
        "partial_trace_ancilla: joint size does not match "
        "dim_system * dim_ancilla");
  ComplexMatrix out(dim_system, dim_system);
  for (std::size_t i = 0; i < dim_system; ++i)
    for (std::size_t j = 0; j < dim_system; ++j) {
      cdouble acc = 0.0;
      for (std::size_t a = 0; a < dim_ancilla; ++a)
        acc += joint(i * dim_ancilla + a, j * dim_ancilla + a);
      out(i, j) = acc;
    }
  return out;
}

namespace {

// One cyclic Jacobi sweep on a Hermitian matrix: for every p < q, zero the
// (p,q) element with the unitary built from the phase of a(p,q) and a real
// Givens rotation. Returns the off-diagonal Frobenius norm before the sweep.
double jacobi_sweep(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double off = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
  off = std::sqrt(2.0 * off);

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const cdouble apq = a(p, q);
      const double absb = std::abs(apq);
      if (absb == 0.0) continue;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double sigma = (aqq - app) / (2.0 * absb);
      double t;
      if (sigma == 0.0) {
        t = 1.0;
      } else {
        t = -std::copysign(1.0, sigma) /
            (std::abs(sigma) + std::sqrt(sigma * sigma + 1.0));
      }
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const cdouble phase = apq / absb;           // e^{i beta}
      const cdouble w = s * std::conj(phase);     // s e^{-i beta}
      // Column update: A <- A K with K = [[c, -s], [s e^{-ib}, c e^{-ib}]]
      for (std::size_t i = 0; i < n; ++i) {
        const cdouble aip = a(i, p);
        const cdouble aiq = a(i, q);
        a(i, p) = c * aip + w * aiq;
        a(i, q) = -s * aip + c * std::conj(phase) * aiq;
      }
      // Row update: A <- K^dagger A.
      for (std::size_t j = 0; j < n; ++j) {
        const cdouble apj = a(p, j);
        const cdouble aqj = a(q, j);
        a(p, j) = c * apj + s * phase * aqj;
        a(q, j) = -s * apj + c * phase * aqj;
      }
    }
  }
  return off;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(ComplexMatrix a) {
  if (!a.is_square())
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  const double scale = std::max(a.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 60; ++sweep) {
    const double off = jacobi_sweep(a);
    if (off <= 1e-14 * scale * static_cast<double>(n)) break;
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  return hermitian_eigenvalues(hermitian).front();
}

PureState::PureState(std::vector<cdouble> amplitudes)
    : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw std::invalid_argument("PureState: empty amplitudes");
  double norm2 = 0.0;
  for (const auto& z : amps_) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("PureState: amplitudes not normalized");
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("PureState::basis: index out of range");
  std::vector<cdouble> amps(dim);
  amps[index] = 1.0;
  return PureState(std::move(amps));
}

cdouble inner_product(const PureState& bra, const PureState& ket) {
  if (bra.dim() != ket.dim())
    throw std::invalid_argument("inner_product: dimension mismatch");
  cdouble acc = 0.0;
  for (std::size_t i = 0; i < bra.dim(); ++i)
    acc += std::conj(bra[i]) * ket[i];
  return acc;
}

PureState apply(const ComplexMatrix& op, const PureState& state) {
  return PureState(op.apply(state.amplitudes()));
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double herm_tol)
    : mat_(std::move(m)) {
  if (!mat_.is_square())
    throw std::invalid_argument("DensityMatrix: matrix not square");
  if (!is_hermitian(mat_, herm_tol))
    throw std::invalid_argument("DensityMatrix: matrix not Hermitian");
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = psi[i] * std::conj(psi[j]);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

bool DensityMatrix::is_trace_one(double tol) const {
  return std::abs(mat_.trace() - cdouble{1.0, 0.0}) <= tol;
}

void DensityMatrix::validate(double trace_tol, double eig_tol) const {
  if (!is_trace_one(trace_tol))
    throw std::runtime_error("DensityMatrix::validate: trace differs from 1");
  if (min_eigenvalue(mat_) < -eig_tol)
    throw std::runtime_error("DensityMatrix::validate: negative eigenvalue");
}

DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho) {
  return DensityMatrix(u * rho.matrix() * u.adjoint(), 1e-11);
}

}  // namespace quditphase
