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


#include "qudsynth/random.hpp"

#include <cmath>
#include <stdexcept>

namespace qudsynth {

namespace {

// Modified Gram-Schmidt, two passes; R's diagonal is real positive so the
// result is Haar distributed when the input is Ginibre.
Matrix orthonormalize_columns(Matrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  for (std::size_t j = 0; j < cols; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (std::size_t r = 0; r < rows; ++r) proj += std::conj(a(r, k)) * a(r, j);
        for (std::size_t r = 0; r < rows; ++r) a(r, j) -= proj * a(r, k);
      }
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < rows; ++r) nrm += std::norm(a(r, j));
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw std::runtime_error("degenerate random matrix");
    for (std::size_t r = 0; r < rows; ++r) a(r, j) /= nrm;
  }
  return a;
}

}  // namespace

Matrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (auto& x : m.data()) {
    const double re = g(rng);
    const double im = g(rng);
    x = cplx(re, im);
  }
  return m;
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  return orthonormalize_columns(random_ginibre(n, n, rng));
}

Matrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw std::invalid_argument("isometry needs cols <= rows");
  return orthonormalize_columns(random_ginibre(rows, cols, rng));
}

StateVector random_state(std::size_t dim, Rng& rng) {
  const Matrix g = random_ginibre(dim, 1, rng);
  return StateVector(std::vector<cplx>(g.data().begin(), g.data().end())).normalized();
}

Matrix random_density_matrix(std::size_t dim, Rng& rng) {
  const Matrix g = random_ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  cplx tr = 0.0;
  for (std::size_t i = 0; i < dim; ++i) tr += rho(i, i);
  rho *= 1.0 / tr.real();
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

Matrix random_hermitian(std::size_t n, Rng& rng) {
  const Matrix g = random_ginibre(n, n, rng);
  Matrix h = g + g.adjoint();
  h *= 0.5;
  for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
  return h;
}

cplx random_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(-3.14159265358979323846, 3.14159265358979323846);
  return std::polar(1.0, u(rng));
}

}  // namespace qudsynth
