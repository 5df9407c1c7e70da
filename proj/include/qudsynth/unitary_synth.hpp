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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qudsynth/circuit.hpp"
#include "qudsynth/count_model.hpp"

namespace qudsynth {

struct TriangleOptions {
  /// Factor the phase of the first diagonal entry out of the emulation.
  bool factor_global_phase = false;
  /// With factoring on, append one local gate restoring the factored phase.
  bool fix_phase = false;
  double drift_tol = 1e-9;
  std::uint64_t cap = kDefaultDimCap;
};

struct TriangleResult {
  Circuit circuit;       // diagonal emulation, then the adjointed reduction
  Circuit reduction;     // gates that bring U to diagonal form, in order
  std::vector<double> phases;
  double offdiag_residual = 0.0;  // max |(R U)_{ij}|, i != j
  double global_phase = 0.0;
};

/// Triangle reduction of a unitary; circuit_unitary(result.circuit) = U.
TriangleResult triangle_detailed(const Matrix& u, int d, int n, const TriangleOptions& opts = {});
Circuit triangle(const Matrix& u, int d, int n, const TriangleOptions& opts = {});

/// sum_j e^{i phi_j}|j><j| as d^n gates with n-1 controls; phases within
/// 1e-12 of 0 are elided.
Circuit emulate_diagonal(const std::vector<double>& phases, int d, int n);

struct SpectralOptions {
  double skip_tol = 1e-10;
  std::uint64_t cap = kDefaultDimCap;
};

/// prod_j W_j^dag P_j W_j over eigenpairs with nonzero phase.
Circuit spectral_synthesize(const Matrix& u, int d, int n, const SpectralOptions& opts = {});

/// First columns(=ell) columns of the circuit unitary equal `columns`.
Circuit synthesize_isometry(const Matrix& columns, int d, int n, const TriangleOptions& opts = {});

enum class UnitaryAlgo { kTriangle, kSpectral };
UnitaryAlgo parse_unitary_algo(const std::string& text);

struct CountTableCell {
  int d = 2;
  int n = 2;
  std::string algo;  // "triangle", "spectral", or "best"
  CostPair counts;
  std::optional<std::uint64_t> published_cinc;      // set where the published row
  std::optional<std::uint64_t> published_cinc_inv;  // winner is this algorithm
  bool measured = false;       // counts come from lowering a synthesized circuit
  bool formula_agrees = true;  // measured counts equal the count model
  bool match = false;          // every published value present is reproduced
  std::string note;

  bool has_published() const { return published_cinc || published_cinc_inv; }
};

/// Published CINC / CINC^-1 minima and whether Triangle attains each.
struct PublishedCell {
  CostPair counts;
  bool triangle_row1 = false;
  bool triangle_row2 = false;
};
std::optional<PublishedCell> published_counts(int d, int n);

struct CountTableOptions {
  std::uint64_t measure_cap = 64;  // synthesize and lower when d^n <= cap
  std::uint64_t seed = 2024;
};

std::vector<CountTableCell> table2_report(int d_lo, int d_hi, int n_lo, int n_hi,
                                      const CountTableOptions& opts = {});

/// CSV with columns d,n,algo,cinc,cinc_inv,paper_cinc,paper_cinc_inv,match,source
/// (the two reference columns hold the published counts).
std::string table2_csv(const std::vector<CountTableCell>& cells);

/// Measured CINC / CINC^-1 of a fully lowered synthesis of u.
CostPair measured_lowered_counts(const Circuit& c);

}  // namespace qudsynth
