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
#include "qudsynth/count_model.hpp"
#include "qudsynth/random.hpp"
#include "qudsynth/state_synth.hpp"
#include "qudsynth/unitary_synth.hpp"

namespace qudsynth {
namespace {

Matrix random_diagonal(std::size_t dim, Rng& rng) {
  std::vector<cplx> ph(dim);
  for (auto& p : ph) p = random_phase(rng);
  return Matrix::diagonal(ph);
}

TEST(Triangle, DiagonalNeedsNoReduction) {
  Rng rng(1);
  const Matrix u = random_diagonal(9, rng);
  const TriangleResult r = triangle_detailed(u, 3, 2);
  EXPECT_TRUE(r.reduction.without_elidable().gates.empty());
  EXPECT_LT(distance_up_to_phase(circuit_unitary(r.circuit), u).distance, 1e-10);
}

TEST(Triangle, SingleQuditBase) {
  Rng rng(2);
  const Matrix u = random_unitary(4, rng);
  const TriangleResult r = triangle_detailed(u, 4, 1);
  for (const auto& g : r.circuit.gates) EXPECT_EQ(g.num_controls(), 0);
  EXPECT_LT(distance_up_to_phase(circuit_unitary(r.circuit), u).distance, 1e-10);
}

TEST(Triangle, RandomReconstructionAndDiagonalResidual) {
  Rng rng(3);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}, {2, 4}}) {
    const Matrix u = random_unitary(checked_pow(d, n), rng);
    const TriangleResult r = triangle_detailed(u, d, n);
    EXPECT_LT(r.offdiag_residual, 1e-8);
    EXPECT_LT(distance_up_to_phase(circuit_unitary(r.circuit), u).distance, 1e-8) << d << "," << n;
  }
}

TEST(Triangle, ReductionHistogramEqualsF) {
  Rng rng(4);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
    const TriangleResult r = triangle_detailed(random_unitary(checked_pow(d, n), rng), d, n);
    const GateCounts gc = gate_counts(r.reduction);
    for (int k = 0; k < n; ++k) EXPECT_EQ(gc.arity(k), f_count(n, k, d)) << d << n << k;
  }
}

TEST(Triangle, NonUnitaryRejected) {
  Matrix m = Matrix::identity(4);
  m(0, 1) = 0.5;
  EXPECT_THROW(triangle(m, 2, 2), std::invalid_argument);
}

TEST(DiagonalEmulation, ZeroPhasesEmpty) {
  EXPECT_TRUE(emulate_diagonal(std::vector<double>(9, 0.0), 3, 2).without_elidable().gates.empty());
}

TEST(DiagonalEmulation, LastIndexNeedsNoConjugation) {
  std::vector<double> ph(8, 0.0);
  ph[7] = 0.7;
  const Circuit c = emulate_diagonal(ph, 2, 3).without_elidable();
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0].num_controls(), 2);
}

TEST(DiagonalEmulation, RandomPhasesExact) {
  Rng rng(5);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    const std::size_t dim = checked_pow(d, n);
    std::vector<double> ph(dim);
    std::vector<cplx> diag(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      ph[j] = std::arg(random_phase(rng));
      diag[j] = std::polar(1.0, ph[j]);
    }
    EXPECT_LT(max_norm_distance(circuit_unitary(emulate_diagonal(ph, d, n)), Matrix::diagonal(diag)),
              1e-12);
  }
}

TEST(Spectral, IdentityIsEmpty) {
  EXPECT_TRUE(spectral_synthesize(Matrix::identity(9), 3, 2).gates.empty());
}

TEST(Spectral, DiagonalUsesBasisKets) {
  Rng rng(6);
  const Matrix u = random_diagonal(4, rng);
  const Circuit c = spectral_synthesize(u, 2, 2);
  EXPECT_LT(distance_up_to_phase(circuit_unitary(c), u).distance, 1e-10);
  // basis-ket collapses only permute labels
  for (const auto& g : c.gates) {
    const Matrix& v = g.v;
    bool perm_or_diag = true;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      int nz = 0;
      for (std::size_t j = 0; j < v.cols(); ++j) nz += std::abs(v(i, j)) > 1e-12;
      perm_or_diag &= nz == 1;
    }
    EXPECT_TRUE(perm_or_diag);
  }
}

TEST(Spectral, RandomReconstruction) {
  Rng rng(7);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 2}}) {
    const Matrix u = random_unitary(checked_pow(d, n), rng);
    EXPECT_LT(distance_up_to_phase(circuit_unitary(spectral_synthesize(u, d, n)), u).distance, 1e-7);
  }
}

TEST(Isometry, SingleColumnIsStatePrep) {
  Rng rng(8);
  const Matrix y = random_isometry(9, 1, rng);
  const Circuit c = synthesize_isometry(y, 3, 2);
  const Matrix u = circuit_unitary(c);
  EXPECT_LT(distance_up_to_phase(u.block(0, 0, 9, 1), y).distance, 1e-10);
}

TEST(Isometry, FullWidthAgreesWithTriangle) {
  Rng rng(9);
  const Matrix u = random_unitary(8, rng);
  EXPECT_LT(distance_up_to_phase(circuit_unitary(synthesize_isometry(u, 2, 3)), u).distance, 1e-8);
}

TEST(Isometry, TwoColumns) {
  Rng rng(10);
  const Matrix y = random_isometry(8, 2, rng);
  const Circuit c = synthesize_isometry(y, 2, 3);
  EXPECT_LT(distance_up_to_phase(circuit_unitary(c).block(0, 0, 8, 2), y).distance, 1e-7);
  EXPECT_LT(c.gates.size(), triangle(random_unitary(8, rng), 2, 3).gates.size());
}

TEST(Isometry, NonIsometricRejected) {
  Matrix y(4, 2);
  y(0, 0) = 1.0;
  y(0, 1) = 1.0;
  EXPECT_THROW(synthesize_isometry(y, 2, 2), std::invalid_argument);
}

TEST(LoweredCounts, MatchModel) {
  Rng rng(11);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const Matrix u = random_unitary(checked_pow(d, n), rng);
    EXPECT_EQ(measured_lowered_counts(triangle(u, d, n)), triangle_counts(d, n));
    EXPECT_EQ(measured_lowered_counts(spectral_synthesize(u, d, n)), spectral_counts(d, n));
  }
}

TEST(CountTable, SmallestCell) {
  const auto cells = table2_report(2, 2, 2, 2);
  bool found = false;
  for (const auto& c : cells) {
    if (c.algo != "triangle") continue;
    found = true;
    EXPECT_EQ(c.counts, CostPair({18, 18}));
    ASSERT_TRUE(c.published_cinc && c.published_cinc_inv);
    EXPECT_EQ(*c.published_cinc, 18u);
    EXPECT_TRUE(c.match);
  }
  EXPECT_TRUE(found);
}

TEST(CountTable, QutritTripleSpectralWins) {
  const auto pub = published_counts(3, 3);
  ASSERT_TRUE(pub);
  EXPECT_EQ(pub->counts, CostPair({2025, 1944}));
  EXPECT_EQ(spectral_counts(3, 3), pub->counts);
  const std::string csv = table2_csv(table2_report(3, 3, 3, 3));
  EXPECT_NE(csv.find("3,3,spectral,2025,1944,2025,1944,1"), std::string::npos);
  EXPECT_EQ(csv.rfind("d,n,algo,cinc,cinc_inv,paper_cinc,paper_cinc_inv,match", 0), 0u);
}

TEST(UnitaryAlgoText, Parse) {
  EXPECT_EQ(parse_unitary_algo("spectral"), UnitaryAlgo::kSpectral);
  EXPECT_THROW(parse_unitary_algo("qsd"), std::invalid_argument);
}

}  // namespace
}  // namespace qudsynth
