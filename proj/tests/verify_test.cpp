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

#include "qudsynth/control_lowering.hpp"
#include "qudsynth/random.hpp"
#include "qudsynth/unitary_synth.hpp"
#include "qudsynth/verify.hpp"

namespace qudsynth {
namespace {

cplx trace_product(const Matrix& a, const Matrix& b) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

TEST(DensityMatrix, Validation) {
  EXPECT_NO_THROW(DensityMatrix(Matrix::diagonal(std::vector<cplx>{0.5, 0.5})));
  EXPECT_THROW(DensityMatrix(Matrix::diagonal(std::vector<cplx>{0.7, 0.5})), std::invalid_argument);
  EXPECT_THROW(DensityMatrix(Matrix::diagonal(std::vector<cplx>{1.5, -0.5})), std::invalid_argument);
  const Matrix nh{{0.5, 0.1}, {0.0, 0.5}};
  EXPECT_THROW(DensityMatrix{nh}, std::invalid_argument);
}

TEST(Verify, IdentityCircuit) {
  const VerificationResult r = verify_circuit(Circuit(2, 2), Matrix::identity(4), false);
  EXPECT_EQ(r.error, 0.0);
  EXPECT_TRUE(r.pass_1e10);
}

TEST(Verify, GlobalPhaseQuotient) {
  Rng rng(1);
  const Matrix u = random_unitary(4, rng);
  const Circuit c = triangle(u, 2, 2);
  const Matrix shifted = std::polar(1.0, 3.14159265358979 / 5) * circuit_unitary(c);
  const VerificationResult r = verify_circuit(c, shifted, true);
  EXPECT_GT(r.raw_error, 0.1);
  EXPECT_LT(r.phase_adjusted_error, 1e-12);
  EXPECT_LE(r.phase_adjusted_error, r.raw_error + 1e-15);
  EXPECT_FALSE(verify_circuit(c, shifted, false).pass(1e-8));
}

TEST(Verify, TriangleOutput) {
  Rng rng(2);
  const Matrix u = random_unitary(9, rng);
  EXPECT_TRUE(verify_circuit(triangle(u, 3, 2), u, true).pass(1e-7));
}

TEST(Verify, LibraryFollowsDeclaredLevel) {
  Rng rng(3);
  const Matrix u = random_unitary(4, rng);
  const Circuit low = lower_circuit(spectral_synthesize(u, 2, 2), LoweringTarget::kCinc);
  const VerificationResult r = verify_circuit(low, u, true);
  EXPECT_EQ(r.declared_level, "cinc");
  EXPECT_TRUE(r.library_ok);
  Circuit bad = low;
  bad.metadata.push_back("lowered: cinc-only");
  const VerificationResult rb = verify_circuit(bad, u, true);
  EXPECT_FALSE(rb.library_ok);
  EXPECT_FALSE(rb.pass(1e-7));
}

TEST(Verify, DimensionMismatch) {
  EXPECT_THROW(verify_circuit(Circuit(2, 2), Matrix::identity(8), false), std::invalid_argument);
}

TEST(Expectation, DiagonalObservable) {
  const Matrix a = Matrix::diagonal(std::vector<cplx>{1, 2, 3, 4});
  const Matrix rho = Matrix::diagonal(std::vector<cplx>{0.1, 0.2, 0.3, 0.4});
  const ExpectationResult r = expectation_value(a, DensityMatrix(rho), 2, 2);
  EXPECT_NEAR(r.value.real(), 3.0, 1e-10);
}

TEST(Expectation, IdentityObservable) {
  Rng rng(4);
  const DensityMatrix rho(random_density_matrix(9, rng));
  EXPECT_NEAR(expectation_value(Matrix::identity(9), rho, 3, 2).value.real(), 1.0, 1e-10);
}

TEST(Expectation, RandomHermitianBothSynthesizers) {
  Rng rng(5);
  const Matrix a = random_hermitian(9, rng);
  const DensityMatrix rho(random_density_matrix(9, rng));
  const cplx direct = trace_product(a, rho.matrix());
  const ExpectationResult t = expectation_value(a, rho, 3, 2, UnitaryAlgo::kTriangle);
  const ExpectationResult s = expectation_value(a, rho, 3, 2, UnitaryAlgo::kSpectral);
  EXPECT_LT(std::abs(t.value - direct), 1e-8);
  EXPECT_LT(std::abs(s.value - direct), 1e-8);
  EXPECT_FALSE(t.anti_hermitian);
}

TEST(Expectation, NonHermitianSplit) {
  Rng rng(6);
  const Matrix a = random_ginibre(8, 8, rng);
  const DensityMatrix rho(random_density_matrix(8, rng));
  const ExpectationResult r = expectation_value(a, rho, 2, 3);
  ASSERT_TRUE(r.anti_hermitian);
  EXPECT_LT(std::abs(r.value - trace_product(a, rho.matrix())), 1e-8);
  EXPECT_LT(std::abs(r.value - r.direct), 1e-8);
}

TEST(Subspace, EmptyAndFull) {
  Rng rng(7);
  const Matrix a = random_hermitian(4, rng);
  const DensityMatrix rho(random_density_matrix(4, rng));
  EXPECT_EQ(subspace_expectation(a, rho, 0, 2, 2).value, cplx(0.0));
  EXPECT_LT(std::abs(subspace_expectation(a, rho, 4, 2, 2).value - expectation_value(a, rho, 2, 2).value),
            1e-8);
}

TEST(Subspace, MatchesProjectorTrace) {
  Rng rng(8);
  const Matrix a = random_hermitian(9, rng);
  const DensityMatrix rho(random_density_matrix(9, rng));
  const SubspaceResult r = subspace_expectation(a, rho, 2, 3, 2);
  const EigenSystem es = normal_eigendecomposition(a, EigenMode::kHermitian);
  // P_S A P_S over the two largest |lambda|
  Matrix proj(9, 9);
  for (std::size_t j = 0; j < 2; ++j) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 9; ++i)
      if (std::abs(es.eigenvalues[i] - r.eigenvalues[j]) < 1e-10) idx = i;
    const auto u = es.eigenvectors.column(idx);
    for (std::size_t x = 0; x < 9; ++x)
      for (std::size_t y = 0; y < 9; ++y) proj(x, y) += r.eigenvalues[j] * u[x] * std::conj(u[y]);
  }
  EXPECT_LT(std::abs(r.value - trace_product(proj, rho.matrix())), 1e-8);
  EXPECT_GE(std::abs(r.eigenvalues[0]), std::abs(r.eigenvalues[1]));
}

TEST(Subspace, NormalObservable) {
  Rng rng(9);
  const Matrix u = random_unitary(4, rng);
  const DensityMatrix rho(random_density_matrix(4, rng));
  const SubspaceResult r = subspace_expectation(u, rho, 4, 2, 2);
  EXPECT_LT(std::abs(r.value - trace_product(u, rho.matrix())), 1e-8);
}

}  // namespace
}  // namespace qudsynth
