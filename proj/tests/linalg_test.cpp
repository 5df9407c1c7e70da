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


#include <gtest/gtest.h>

#include <cmath>

#include "qudsynth/linalg.hpp"
#include "qudsynth/random.hpp"

namespace qudsynth {
namespace {

constexpr double kPi = 3.14159265358979323846;

TEST(Matrix, RejectsBadShapesAndNonFinite) {
  EXPECT_THROW(Matrix(2, 2, std::vector<cplx>(3)), std::invalid_argument);
  Matrix m = Matrix::identity(2);
  m(0, 1) = cplx(std::nan(""), 0.0);
  EXPECT_THROW(m.check_finite(), std::invalid_argument);
}

TEST(Matrix, KronPlacesBlocks) {
  const Matrix x{{0, 1}, {1, 0}};
  const Matrix k = kron(x, Matrix::identity(2));
  EXPECT_EQ(k(0, 2), cplx(1));
  EXPECT_EQ(k(1, 3), cplx(1));
  EXPECT_EQ(k(0, 0), cplx(0));
}

TEST(Householder, BasisKetGivesIdentity) {
  const std::vector<cplx> psi{1, 0, 0};
  EXPECT_LT(max_norm_distance(householder_to_e0(psi), Matrix::identity(3)), 1e-15);
}

TEST(Householder, QubitOneIsPauliX) {
  const std::vector<cplx> psi{0, 1};
  const Matrix x{{0, 1}, {1, 0}};
  EXPECT_LT(max_norm_distance(householder_to_e0(psi), x), 1e-15);
}

TEST(Householder, PlusStateCollapses) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> psi{r, r};
  const Matrix w = householder_to_e0(psi);
  const auto out = w * std::span<const cplx>(psi);
  EXPECT_NEAR(std::abs(out[0]), 1.0, 1e-14);
  EXPECT_LT(std::abs(out[1]), 1e-14);
}

TEST(Householder, ZeroVectorThrows) {
  const std::vector<cplx> psi{0, 0, 0};
  EXPECT_THROW(householder_to_e0(psi), std::invalid_argument);
}

TEST(Householder, RandomVectorsReflectOntoE0) {
  Rng rng(11);
  for (std::size_t d = 2; d <= 6; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const StateVector psi = random_state(d, rng);
      const Matrix w = householder_to_e0(psi.amplitudes());
      EXPECT_LT(unitarity_error(w), 1e-12);
      EXPECT_LT(hermiticity_error(w), 1e-12);
      const auto out = w * psi.amplitudes();
      EXPECT_NEAR(std::abs(out[0]), 1.0, 1e-12);
      for (std::size_t k = 1; k < d; ++k) EXPECT_LT(std::abs(out[k]), 1e-12);
    }
  }
}

void expect_eigen_residuals(const Matrix& m, const EigenSystem& es) {
  EXPECT_LT(unitarity_error(es.eigenvectors), 1e-9);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const auto v = es.eigenvectors.column(k);
    auto mv = m * std::span<const cplx>(v);
    for (std::size_t i = 0; i < v.size(); ++i) mv[i] -= es.eigenvalues[k] * v[i];
    EXPECT_LT(norm(mv), 1e-9);
  }
}

TEST(Eigen, IdentityHasUnitEigenvalues) {
  const EigenSystem es = normal_eigendecomposition(Matrix::identity(3), EigenMode::kUnitary);
  for (const auto& l : es.eigenvalues) EXPECT_LT(std::abs(l - 1.0), 1e-12);
  expect_eigen_residuals(Matrix::identity(3), es);
}

TEST(Eigen, DiagonalPhasesReadOff) {
  const std::vector<cplx> ph{std::polar(1.0, kPi / 3), std::polar(1.0, -kPi / 3)};
  const Matrix m = Matrix::diagonal(ph);
  const EigenSystem es = normal_eigendecomposition(m, EigenMode::kUnitary);
  expect_eigen_residuals(m, es);
  for (const auto& l : es.eigenvalues) {
    EXPECT_TRUE(std::abs(l - ph[0]) < 1e-12 || std::abs(l - ph[1]) < 1e-12);
  }
}

TEST(Eigen, RandomUnitaryResiduals) {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix u = random_unitary(9, rng);
    expect_eigen_residuals(u, normal_eigendecomposition(u, EigenMode::kUnitary));
  }
}

TEST(Eigen, HermitianEigenvaluesAreReal) {
  Rng rng(5);
  const Matrix h = random_hermitian(8, rng);
  const EigenSystem es = normal_eigendecomposition(h, EigenMode::kHermitian);
  expect_eigen_residuals(h, es);
  for (const auto& l : es.eigenvalues) EXPECT_LT(std::abs(l.imag()), 1e-12);
}

TEST(Eigen, DegenerateUnitary) {
  // repeated eigenvalues stress the pair decomposition
  Rng rng(3);
  const Matrix q = random_unitary(6, rng);
  const std::vector<cplx> ph{1, 1, -1, -1, cplx(0, 1), cplx(0, 1)};
  const Matrix u = q * Matrix::diagonal(ph) * q.adjoint();
  expect_eigen_residuals(u, normal_eigendecomposition(u, EigenMode::kUnitary));
}

TEST(Eigen, NonNormalRejected) {
  const Matrix m{{1, 1}, {0, 1}};
  EXPECT_THROW(normal_eigendecomposition(m, EigenMode::kNormal), std::invalid_argument);
  EXPECT_THROW(normal_eigendecomposition(m, EigenMode::kHermitian), std::invalid_argument);
  EXPECT_THROW(normal_eigendecomposition(m, EigenMode::kUnitary), std::invalid_argument);
}

TEST(UnitaryRoot, IdentityRoot) {
  EXPECT_LT(max_norm_distance(unitary_root(Matrix::identity(3), 3), Matrix::identity(3)), 1e-14);
}

TEST(UnitaryRoot, PrincipalBranch) {
  const Matrix v{{-1, 0}, {0, 1}};
  const Matrix x = unitary_root(v, 2);
  const Matrix expect{{cplx(0, 1), 0}, {0, 1}};
  EXPECT_LT(max_norm_distance(x, expect), 1e-12);
}

TEST(UnitaryRoot, CubeReproduces) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix v = random_unitary(3, rng);
    const Matrix x = unitary_root(v, 3);
    EXPECT_LT(max_norm_distance(matrix_power(x, 3), v), 1e-8);
  }
}

TEST(UnitaryRoot, RejectsNonUnitary) {
  const Matrix m{{2, 0}, {0, 1}};
  EXPECT_THROW(unitary_root(m, 2), std::invalid_argument);
}

Matrix qr_product(const QrResult& qr, std::size_t d) {
  Matrix r = Matrix::identity(d);
  for (const auto& h : qr.reflections) r = h * r;
  return r;
}

TEST(Qr, IdentityHasUnitPhases) {
  const QrResult qr = qr_one_qudit(Matrix::identity(3));
  EXPECT_LT(max_norm_distance(qr_product(qr, 3), Matrix::identity(3)), 1e-14);
  for (const auto& p : qr.diagonal_phases) EXPECT_LT(std::abs(p - 1.0), 1e-14);
}

TEST(Qr, DiagonalPhasesReadOff) {
  const std::vector<cplx> ph{std::polar(1.0, 0.3), std::polar(1.0, -1.1), std::polar(1.0, 2.0)};
  const QrResult qr = qr_one_qudit(Matrix::diagonal(ph));
  const Matrix r = qr_product(qr, 3) * Matrix::diagonal(ph);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(std::abs(r(i, i) - qr.diagonal_phases[i]), 1e-12);
}

TEST(Qr, RandomReconstruction) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix u = random_unitary(4, rng);
    const QrResult qr = qr_one_qudit(u);
    const Matrix back = qr_product(qr, 4).adjoint() * Matrix::diagonal(qr.diagonal_phases);
    EXPECT_LT(max_norm_distance(back, u), 1e-9);
  }
}

TEST(PhaseDistance, FactorsGlobalPhase) {
  Rng rng(8);
  const Matrix u = random_unitary(4, rng);
  const Matrix v = std::polar(1.0, kPi / 5) * u;
  EXPECT_GT(max_norm_distance(u, v), 0.1);
  const PhaseDistance pd = distance_up_to_phase(v, u);
  EXPECT_LT(pd.distance, 1e-12);
  EXPECT_NEAR(pd.phase, kPi / 5, 1e-12);
}

TEST(Random, DensityMatrixIsValid) {
  Rng rng(2);
  const Matrix rho = random_density_matrix(6, rng);
  cplx tr = 0;
  for (std::size_t i = 0; i < 6; ++i) tr += rho(i, i);
  EXPECT_LT(std::abs(tr - 1.0), 1e-12);
  EXPECT_LT(hermiticity_error(rho), 1e-14);
}

TEST(Random, SeedDeterminism) {
  Rng a(77), b(77);
  EXPECT_EQ(max_norm_distance(random_unitary(5, a), random_unitary(5, b)), 0.0);
}

}  // namespace
}  // namespace qudsynth
