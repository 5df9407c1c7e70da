// Copyright 2026 The qudsynth Authors
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
#include <initializer_list>
#include <span>
#include <vector>

namespace qudsynth {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const cplx> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  Matrix adjoint() const;
  std::vector<cplx> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const cplx> values);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

  /// Throws std::invalid_argument when any entry is NaN or infinite.
  void check_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(cplx s, Matrix m);
std::vector<cplx> operator*(const Matrix& a, std::span<const cplx> x);

/// An n-qudit (or one-qudit) ket, not necessarily normalized.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim) : amps_(dim) {}
  explicit StateVector(std::vector<cplx> amps) : amps_(std::move(amps)) {}

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }

  double norm() const;
  StateVector normalized() const;
  bool is_normalized(double tol = 1e-12) const;

 private:
  std::vector<cplx> amps_;
};

double norm(std::span<const cplx> v);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);  // <a|b>

struct EigenSystem {
  std::vector<cplx> eigenvalues;
  Matrix eigenvectors;  // columns
};

enum class EigenMode { kHermitian, kUnitary, kNormal };

struct EigenOptions {
  double symmetry_tol = 1e-10;
  double degeneracy_tol = 1e-8;
  int max_sweeps = 100;
};

// Plumbing.
Matrix kron(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& m);
double max_norm_distance(const Matrix& a, const Matrix& b);
double unitarity_error(const Matrix& m);  // ||M^dag M - I||_max
bool is_unitary(const Matrix& m, double tol = 1e-10);
double hermiticity_error(const Matrix& m);
double normality_error(const Matrix& m);
Matrix matrix_power(const Matrix& m, int p);

struct PhaseDistance {
  double distance = 0.0;  // max-norm of a - e^{i phase} b
  double phase = 0.0;
};

/// Max-norm distance between a and e^{i alpha} b, alpha taken from the
/// trace inner product <b, a>; never worse than the alpha = 0 distance.
PhaseDistance distance_up_to_phase(const Matrix& a, const Matrix& b);

/// One-qudit Householder reflection W with W psi = s e0, |s| = ||psi||.
/// The phase of s equals the phase of psi[0] (taken as 1 when psi[0] = 0).
/// Returns the identity when psi is already proportional to e0.
Matrix householder_to_e0(std::span<const cplx> psi, double degenerate_tol = 1e-12);

/// Jacobi eigensolver for Hermitian matrices; for unitary and general normal
/// matrices the commuting Hermitian pair Re(M), Im(M) is diagonalized in turn.
EigenSystem normal_eigendecomposition(const Matrix& m, EigenMode mode,
                                      const EigenOptions& opts = {});

/// Principal d-th root: eigenphases in (-pi, pi] divided by d.
Matrix unitary_root(const Matrix& v, int d);

struct QrResult {
  std::vector<Matrix> reflections;  // applied in list order
  std::vector<cplx> diagonal_phases;
};

/// Householder QR of a one-qudit unitary: reflections[k-1]...reflections[0] U
/// is diagonal with unit-modulus entries.
QrResult qr_one_qudit(const Matrix& u);

/// Product Q of Householder reflections such that Q m is upper triangular in
/// its first `ncols` columns. Works for any square matrix.
Matrix householder_triangularizer(const Matrix& m, std::size_t ncols);

}  // namespace qudsynth
