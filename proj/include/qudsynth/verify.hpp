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

#include <optional>
#include <string>
#include <vector>

#include "qudsynth/circuit.hpp"
#include "qudsynth/control_lowering.hpp"
#include "qudsynth/unitary_synth.hpp"

namespace qudsynth {

/// Trace one, Hermitian, positive semidefinite.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix rho, double tol = 1e-10, double psd_tol = 1e-9);
  const Matrix& matrix() const { return rho_; }
  std::size_t dim() const { return rho_.rows(); }

 private:
  Matrix rho_;
};

struct VerificationResult {
  double raw_error = 0.0;
  double phase_adjusted_error = 0.0;
  double phase = 0.0;
  double error = 0.0;  // the figure the verdict uses
  bool pass_1e10 = false;
  bool pass_1e8 = false;
  bool pass_1e7 = false;
  std::string declared_level;
  bool library_ok = true;
  std::string library_violation;

  bool pass(double tol) const { return error < tol && library_ok; }
};

/// Compares circuit_unitary(c) with target; the library check follows the
/// circuit's declared lowering level.
VerificationResult verify_circuit(const Circuit& c, const Matrix& target, bool up_to_phase,
                                  std::uint64_t cap = kDefaultDimCap);

/// Columns-only variant for isometries: compares the first target.cols() columns.
VerificationResult verify_isometry(const Circuit& c, const Matrix& target, bool up_to_phase,
                                   std::uint64_t cap = kDefaultDimCap);

/// rho' = C rho C^dag for the circuit unitary C, by gate-wise simulation.
Matrix conjugate_by_circuit(const Circuit& c, const Matrix& rho);

struct MeasuredPart {
  std::vector<double> eigenvalues;
  std::vector<double> populations;  // diagonal of U rho U^dag
  double value = 0.0;
};

struct ExpectationResult {
  cplx value = 0.0;
  cplx direct = 0.0;  // Tr[A rho]
  MeasuredPart hermitian;
  std::optional<MeasuredPart> anti_hermitian;  // A_a = i H; value adds i <H>
};

/// <A> = Tr[A rho] through a synthesized diagonalizing circuit.
ExpectationResult expectation_value(const Matrix& a, const DensityMatrix& rho, int d, int n,
                                    UnitaryAlgo algo = UnitaryAlgo::kTriangle);

struct SubspaceResult {
  cplx value = 0.0;
  std::vector<cplx> eigenvalues;     // sorted: |lambda| descending, then phase
  std::vector<double> populations;   // <u_j|rho|u_j> via the circuit, j < k
};

/// <P_S A P_S> over the first k eigenvectors of a normal A.
SubspaceResult subspace_expectation(const Matrix& a, const DensityMatrix& rho, std::size_t k,
                                    int d, int n);

}  // namespace qudsynth
