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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace quditphase {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix. Carrier for every operator and density
/// matrix in the library; dimensions stay small (D <= a few hundred), so no
/// sparse or blocked storage is attempted.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cdouble& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  cdouble operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const cdouble> data() const noexcept { return data_; }
  std::span<cdouble> data() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  cdouble trace() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cdouble scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(cdouble scalar, ComplexMatrix rhs) {
    rhs *= scalar;
    return rhs;
  }

  /// Matrix product; dimensions must agree.
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

  /// Matrix-vector product.
  std::vector<cdouble> apply(std::span<const cdouble> vec) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> data_;
};

/// Largest elementwise |a - b|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = 1e-12);

bool is_unitary(const ComplexMatrix& m, double tol = 1e-13);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

/// Tensor product with system index major, ancilla index minor:
/// (A (x) B)[i*p + k, j*q + l] = A[i,j] * B[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced system matrix of a (dim_system*dim_ancilla)-dimensional joint
/// operator, summing over the ancilla index. Preserves the trace.
ComplexMatrix partial_trace_ancilla(const ComplexMatrix& joint,
                                    std::size_t dim_system,
                                    std::size_t dim_ancilla);

/// Eigenvalues of a Hermitian matrix (ascending), via cyclic Jacobi
/// rotations. Intended for the small validation-mode positivity checks.
std::vector<double> hermitian_eigenvalues(ComplexMatrix a);

double min_eigenvalue(const ComplexMatrix& hermitian);

/// Normalized pure state of a D-level system.
class PureState {
 public:
  explicit PureState(std::vector<cdouble> amplitudes);

  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const cdouble> amplitudes() const noexcept { return amps_; }
  cdouble operator[](std::size_t i) const { return amps_[i]; }

 private:
  std::vector<cdouble> amps_;
};

cdouble inner_product(const PureState& bra, const PureState& ket);

/// Applies a square matrix to a state; the result must stay normalized
/// (callers only use unitaries and permutations here).
PureState apply(const ComplexMatrix& op, const PureState& state);

/// Density matrix of a D-level system. Construction enforces Hermiticity;
/// trace and positivity are checked by validate() (validation mode), since
/// intentionally lossy maps (truncated Kraus families) may return
/// trace-deficient results.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, double herm_tol = 1e-12);

  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  cdouble entry(std::size_t i, std::size_t j) const { return mat_(i, j); }

  bool is_trace_one(double tol = 1e-12) const;

  /// Validation mode: trace within trace_tol of 1 and min eigenvalue
  /// >= -eig_tol. Throws std::runtime_error otherwise.
  void validate(double trace_tol = 1e-12, double eig_tol = 1e-10) const;

 private:
  ComplexMatrix mat_;
};

/// u rho u^dagger.
DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho);

}  // namespace quditphase
