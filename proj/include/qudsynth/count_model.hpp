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
#include <map>
#include <utility>

namespace qudsynth {

/// CINC and CINC^-1 tallies.
struct CostPair {
  std::uint64_t cinc = 0;
  std::uint64_t cinc_inv = 0;
  bool operator==(const CostPair&) const = default;
};

/// b_k: k-controlled INC with one spare line (b_1 = CINC).
CostPair inc_cost(int k, int d);
/// c_k: k-controlled generic one-qudit gate, no spare (c_0 = 0).
CostPair controlled_cost(int k, int d);

struct ClosedFormCounts {
  CostPair c;  // c_{n-1}
  double c_bound = 0.0;
  double c_inv_bound = 0.0;
  bool c_ok = false;
  bool c_inv_ok = false;
  CostPair b;  // b_{n-2}, meaningful for n >= 3
  double b_bound = 0.0;
  double b_inv_bound = 0.0;
  bool b_ok = false;
};

/// Recurrence values for c_{n-1}, b_{n-2} and their closed-form bounds.
ClosedFormCounts closed_form_counts_c(int n, int d);

/// (d^n - 1)/(d - 1).
std::uint64_t club_count(int n, int d);
std::uint64_t h_count(int n, int k, int d);
std::uint64_t g_count(int n, int k, int d);
std::uint64_t f_count(int n, int k, int d);
/// d^{2n-k+4} as a double.
double f_bound(int n, int k, int d);

/// Fully lowered totals for Triangle (with diagonal emulation) and spectral.
CostPair triangle_counts(int d, int n);
CostPair spectral_counts(int d, int n);

double ell_t_bound(int d, int n);
double ell_s_bound(int d, int n);

/// sum_{k>=1} k^s x^k, i.e. Li_{-s}(x), truncated once terms fall below 1e-16.
double polylog_negative(int s, double x);

struct CountModel {
  int d = 2;
  int n = 1;
  std::map<std::pair<int, int>, std::uint64_t> h, g, f;  // keyed by (n', k)
  CostPair ell_t;
  CostPair ell_s;
  double ell_t_bound = 0.0;
  double ell_s_bound = 0.0;
  bool f_bound_holds = false;  // over all n' <= n, k
};

CountModel count_model(int d, int n);

}  // namespace qudsynth
