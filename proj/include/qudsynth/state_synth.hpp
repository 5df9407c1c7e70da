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
#include <span>
#include <vector>

#include "qudsynth/circuit.hpp"
#include "qudsynth/club_sequence.hpp"

namespace qudsynth {

struct SynthesisStep {
  ClubTerm term;
  Gate gate;                            // as emitted (after INC conjugation)
  std::optional<StateVector> snapshot;  // state after the step, m = 0 frame
};

struct SynthesisTrace {
  std::vector<SynthesisStep> steps;
  std::vector<int> target;  // m as n dits
  cplx residual_phase = 1.0;
  double norm = 0.0;
};

struct StateSynthOptions {
  bool fix_phase = false;
  bool keep_snapshots = false;
  double elide_tol = 1e-12;
};

struct StateSynthResult {
  Circuit circuit;
  SynthesisTrace trace;
};

/// One step: Householder on the fiber |t_1..t_{l-1} k 0..0>, k = 0..d-1.
Gate single_club_householder(const ClubTerm& t, std::span<const cplx> psi_j, int d, int n,
                             double elide_tol = 1e-12);

/// Circuit W with W psi = e^{i phi} ||psi|| |m>; exactly (d^n-1)/(d-1) gates
/// (identity steps flagged elidable), plus one local phase gate with fix_phase.
StateSynthResult club_householder(const StateVector& psi, std::span<const int> m, int d, int n,
                                  const StateSynthOptions& opts = {});

/// Circuit mapping |0..0> to psi/||psi|| (up to global phase unless fix_phase).
Circuit state_prep_circuit(const StateVector& psi, int d, int n, bool fix_phase = false);

}  // namespace qudsynth
