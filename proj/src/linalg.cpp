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

#include "qudsynth/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qudsynth {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const cplx> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

std::vector<cplx> Matrix::column(std::size_t c) const {
  std::vector<cplx> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const cplx> values) {
  if (values.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Matrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

void Matrix::check_finite() const {
  for (const auto& x : data_) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw std::invalid_argument("matrix contains a non-finite entry");
    }
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cplx s, Matrix m) { return m *= s; }

std::vector<cplx> operator*(const Matrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<cplx> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * x[k];
    out[i] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis index out of range");
  StateVector v(dim);
  v[index] = 1.0;
  return v;
}

double StateVector::norm() const { return qudsynth::norm(amps_); }

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  StateVector out(*this);
  for (auto& a : out.amps_) a /= nrm;
  return out;
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) < tol; }

double norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Plumbing

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

double max_abs(const Matrix& m) {
  double out = 0.0;
  for (const auto& x : m.data()) out = std::max(out, std::abs(x));
  return out;
}

double max_norm_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("distance between matrices of different shape");
  }
  double out = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    out = std::max(out, std::abs(a.data()[i] - b.data()[i]));
  return out;
}

double unitarity_error(const Matrix& m) {
  if (!m.is_square()) return INFINITY;
  return max_norm_distance(m.adjoint() * m, Matrix::identity(m.rows()));
}

bool is_unitary(const Matrix& m, double tol) { return unitarity_error(m) < tol; }

double hermiticity_error(const Matrix& m) {
  if (!m.is_square()) return INFINITY;
  return max_norm_distance(m, m.adjoint());
}

double normality_error(const Matrix& m) {
  if (!m.is_square()) return INFINITY;
  const Matrix md = m.adjoint();
  return max_norm_distance(m * md, md * m);
}

Matrix matrix_power(const Matrix& m, int p) {
  if (!m.is_square()) throw std::invalid_argument("power of a non-square matrix");
  if (p < 0) return matrix_power(m.adjoint(), -p);
  Matrix out = Matrix::identity(m.rows());
  for (int i = 0; i < p; ++i) out = out * m;
  return out;
}

PhaseDistance distance_up_to_phase(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("distance between matrices of different shape");
  }
  cplx tr = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) tr += std::conj(b.data()[i]) * a.data()[i];
  const double alpha = std::abs(tr) > 0.0 ? std::arg(tr) : 0.0;
  const cplx w = std::polar(1.0, alpha);
  double d_alpha = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    d_alpha = std::max(d_alpha, std::abs(a.data()[i] - w * b.data()[i]));
  const double d0 = max_norm_distance(a, b);
  if (d0 <= d_alpha) return {d0, 0.0};
  return {d_alpha, alpha};
}

// ---------------------------------------------------------------------------
// Householder

Matrix householder_to_e0(std::span<const cplx> psi, double degenerate_tol) {
  const std::size_t d = psi.size();
  if (d == 0) throw std::invalid_argument("empty vector has no reflection");
  const double nrm = norm(psi);
  if (nrm == 0.0) throw std::invalid_argument("zero vector has no reflection");
  const cplx phase = std::abs(psi[0]) > 0.0 ? psi[0] / std::abs(psi[0]) : cplx{1.0};
  std::vector<cplx> eta(psi.begin(), psi.end());
  eta[0] -= nrm * phase;
  const double eta_sq = std::norm(norm(eta));
  if (std::sqrt(eta_sq) < degenerate_tol) return Matrix::identity(d);
  Matrix w = Matrix::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) w(i, j) -= 2.0 * eta[i] * std::conj(eta[j]) / eta_sq;
  return w;
}

Matrix householder_triangularizer(const Matrix& m, std::size_t ncols) {
  if (!m.is_square()) throw std::invalid_argument("triangularizer needs a square matrix");
  const std::size_t d = m.rows();
  Matrix work = m;
  Matrix q = Matrix::identity(d);
  const std::size_t last = std::min(ncols, d == 0 ? 0 : d - 1);
  for (std::size_t j = 0; j < last; ++j) {
    std::vector<cplx> sub(d - j);
    for (std::size_t r = j; r < d; ++r) sub[r - j] = work(r, j);
    if (norm(sub) == 0.0) continue;
    const Matrix h_sub = householder_to_e0(sub);
    Matrix h = Matrix::identity(d);
    for (std::size_t r = j; r < d; ++r)
      for (std::size_t c = j; c < d; ++c) h(r, c) = h_sub(r - j, c - j);
    work = h * work;
    q = h * q;
  }
  return q;
}

QrResult qr_one_qudit(const Matrix& u) {
  if (!u.is_square() || !is_unitary(u, 1e-10)) {
    throw std::invalid_argument("qr_one_qudit requires a unitary matrix");
  }
  const std::size_t d = u.rows();
  QrResult out;
  Matrix work = u;
  for (std::size_t j = 0; j + 1 < d; ++j) {
    std::vector<cplx> sub(d - j);
    for (std::size_t r = j; r < d; ++r) sub[r - j] = work(r, j);
    const Matrix h_sub = householder_to_e0(sub);
    bool trivial = true;
    for (std::size_t r = 0; r < h_sub.rows() && trivial; ++r)
      for (std::size_t c = 0; c < h_sub.cols(); ++c)
        if (h_sub(r, c) != (r == c ? cplx{1.0} : cplx{})) {
          trivial = false;
          break;
        }
    if (trivial) continue;
    Matrix h = Matrix::identity(d);
    for (std::size_t r = j; r < d; ++r)
      for (std::size_t c = j; c < d; ++c) h(r, c) = h_sub(r - j, c - j);
    work = h * work;
    out.reflections.push_back(std::move(h));
  }
  out.diagonal_phases.resize(d);
  for (std::size_t i = 0; i < d; ++i) out.diagonal_phases[i] = work(i, i);
  return out;
}

// ---------------------------------------------------------------------------
// Eigendecomposition

namespace {

// Cyclic complex Jacobi; on return `a` is (numerically) diagonal and
// `v` holds the accumulated rotations as columns.
void jacobi_hermitian(Matrix& a, Matrix& v, int max_sweeps) {
  const std::size_t n = a.rows();
  v = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  double fro_sq = 0.0;
  for (const auto& x : a.data()) fro_sq += std::norm(x);
  if (fro_sq == 0.0) return;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off_sq = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off_sq += std::norm(a(p, q));
    if (off_sq <= 1e-32 * fro_sq) return;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const cplx phase = apq / r;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx g_pp = c;
        const cplx g_pq = s;
        const cplx g_qp = -s * std::conj(phase);
        const cplx g_qq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
}

// Eigenvalues ascending, with matching column order.
std::pair<std::vector<double>, Matrix> hermitian_eig(const Matrix& h, int max_sweeps) {
  Matrix a = h;
  Matrix v;
  jacobi_hermitian(a, v, max_sweeps);
  const std::size_t n = h.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  std::vector<double> w(n);
  Matrix vs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) vs(r, k) = v(r, order[k]);
  }
  return {w, vs};
}

double max_residual(const Matrix& m, const EigenSystem& es) {
  double worst = 0.0;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const auto vk = es.eigenvectors.column(k);
    const auto mv = m * std::span<const cplx>(vk);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(mv[i] - es.eigenvalues[k] * vk[i]);
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

// Diagonalize Re(e^{-i gamma} M) by Jacobi, then split each near-degenerate
// eigenspace with Im(e^{-i gamma} M). Exact for normal M.
EigenSystem pair_decomposition(const Matrix& m, double gamma, const EigenOptions& opts) {
  const std::size_t n = m.rows();
  const cplx rot = std::polar(1.0, -gamma);
  const Matrix md = m.adjoint();
  Matrix h1(n, n), h2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx x = rot * m(i, j);
      const cplx y = std::conj(rot) * md(i, j);
      h1(i, j) = 0.5 * (x + y);
      h2(i, j) = (x - y) / cplx(0.0, 2.0);
    }
  }
  auto [w1, v] = hermitian_eig(h1, opts.max_sweeps);

  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && w1[end] - w1[end - 1] < opts.degeneracy_tol) ++end;
    const std::size_t g = end - start;
    if (g > 1) {
      Matrix vg = v.block(0, start, n, g);
      Matrix sub = vg.adjoint() * h2 * vg;
      auto [w2, q] = hermitian_eig(sub, opts.max_sweeps);
      Matrix rotated = vg * q;
      for (std::size_t k = 0; k < g; ++k)
        for (std::size_t r = 0; r < n; ++r) v(r, start + k) = rotated(r, k);
    }
    start = end;
  }

  EigenSystem out;
  out.eigenvectors = v;
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto vk = v.column(k);
    const auto mv = m * std::span<const cplx>(vk);
    out.eigenvalues[k] = inner(vk, mv);
  }
  return out;
}

}  // namespace

EigenSystem normal_eigendecomposition(const Matrix& m, EigenMode mode,
                                      const EigenOptions& opts) {
  if (!m.is_square() || m.rows() == 0) {
    throw std::invalid_argument("eigendecomposition needs a non-empty square matrix");
  }
  m.check_finite();
  const double scale = std::max(1.0, max_abs(m));

  if (mode == EigenMode::kHermitian) {
    const double err = hermiticity_error(m);
    if (err >= opts.symmetry_tol * scale) {
      throw std::invalid_argument("matrix is not Hermitian (||M - M^dag||_max = " +
                                  std::to_string(err) + ")");
    }
    auto [w, v] = hermitian_eig(m, opts.max_sweeps);
    EigenSystem out;
    out.eigenvectors = std::move(v);
    out.eigenvalues.assign(w.begin(), w.end());
    return out;
  }
  if (mode == EigenMode::kUnitary) {
    const double err = unitarity_error(m);
    if (err >= opts.symmetry_tol) {
      throw std::invalid_argument("matrix is not unitary (||M^dag M - I||_max = " +
                                  std::to_string(err) + ")");
    }
  } else {
    const double err = normality_error(m);
    if (err >= opts.symmetry_tol * scale * scale) {
      throw std::invalid_argument("matrix is not normal (||M M^dag - M^dag M||_max = " +
                                  std::to_string(err) + ")");
    }
  }

  // A single rotation angle can hit an accidental near-coincidence of
  // Re(e^{-i gamma} lambda) between distinct eigenvalues, which degrades the
  // eigenvectors; retry with other angles and keep the best.
  static constexpr std::array<double, 4> kAngles = {0.0, 0.6180339887, 1.3714, 2.2360679775};
  const double accept = 1e-12 * scale * std::sqrt(static_cast<double>(m.rows()));
  EigenSystem best;
  double best_res = INFINITY;
  for (double gamma : kAngles) {
    EigenSystem es = pair_decomposition(m, gamma, opts);
    const double res = max_residual(m, es);
    if (res < best_res) {
      best_res = res;
      best = std::move(es);
    }
    if (best_res < accept) break;
  }
  return best;
}

Matrix unitary_root(const Matrix& v, int d) {
  if (d < 1) throw std::invalid_argument("root order must be positive");
  const EigenSystem es = normal_eigendecomposition(v, EigenMode::kUnitary);
  const std::size_t n = v.rows();
  std::vector<cplx> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    double phase = std::arg(es.eigenvalues[k]);
    if (phase <= -kPi) phase = kPi;
    roots[k] = std::polar(1.0, phase / d);
  }
  const Matrix& u = es.eigenvectors;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += u(i, k) * roots[k] * std::conj(u(j, k));
      out(i, j) = s;
    }
  return out;
}

}  // namespace qudsynth
