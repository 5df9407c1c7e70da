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

#include <string>
#include <vector>

#include "qudsynth/circuit.hpp"

namespace qudsynth {

struct LoweringOptions {
  /// Skip a root-chain level once ||X - I||_max < epsilon; 0 keeps it exact.
  double epsilon = 0.0;
};

/// ||X_j - I||_max along the chain V, V^{1/d}, V^{1/d^2}, ...
using RootChain = std::vector<double>;

/// One-control gate to {LOCAL, CINC, CINC_INV}: exactly d CINC and d CINC^-1
/// unless the gate already is a CINC primitive.
Circuit lower_singly_controlled(const Gate& g, int d, int n);

/// One-control gate to LOCAL plus controlled flips FLIP(0,1): 2d(d-1) flips
/// for a generic V, d-1 for a CINC primitive.
Circuit lower_controlled_flip_form(const Gate& g, int d, int n);

/// k >= 2 controls to gates with at most one control, on the gate's own
/// control and target lines only.
Circuit lower_multi_controlled(const Gate& g, int d, int n, const LoweringOptions& opts = {},
                               RootChain* chain = nullptr);

/// k-controlled INC with controls on lines 0..k-1, a spare line k and the
/// target on line k+1 (n_ambient >= k + 2 when k >= 3).
Circuit lower_k_controlled_inc(int k, int d, int n_ambient);

enum class LoweringTarget { kTwoQudit, kCinc, kCincOnly, kFlip };

LoweringTarget parse_lowering_target(const std::string& text);
std::string lowering_target_name(LoweringTarget t);

/// Lowers every gate of the circuit; elidable gates are dropped.
Circuit lower_circuit(const Circuit& c, LoweringTarget target, const LoweringOptions& opts = {});

/// Replaces each CINC^-1 by d-1 copies of CINC.
Circuit cinc_only_rewrite(const Circuit& c);

struct MembershipResult {
  bool ok = true;
  std::string first_violation;
};

/// Syntactic gate-library check for a lowering target.
MembershipResult check_gate_library(const Circuit& c, LoweringTarget target);

/// True when every gate touches only lines in `allowed`.
bool touches_only(const Circuit& c, const std::vector<int>& allowed);

}  // namespace qudsynth
