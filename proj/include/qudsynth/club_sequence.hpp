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
#include <functional>
#include <string>
#include <vector>

#include "qudsynth/circuit.hpp"

namespace qudsynth {

/// Letter value standing for the club symbol.
inline constexpr int kClub = -1;

/// Word over {0..d-1, club}; the clubs form a non-empty suffix.
struct ClubTerm {
  std::vector<int> letters;

  /// 0-based position of the leftmost club.
  std::size_t leftmost_club() const;
  std::string to_string(bool pretty = false) const;
  bool operator==(const ClubTerm&) const = default;
};

struct ClubSequence {
  int d = 2;
  int n = 1;
  std::vector<ClubTerm> terms;
};

/// (d^n - 1)/(d - 1), throwing std::overflow_error past `cap`.
std::uint64_t club_sequence_length(int d, int n, std::uint64_t cap = 1'000'000);

ClubSequence make_club_sequence(int d, int n, std::uint64_t cap = 1'000'000);

/// Streams the same terms in order without materializing them.
void for_each_club_term(int d, int n, const std::function<void(const ClubTerm&)>& fn);

/// T on the leftmost club; one control at the rightmost positive letter.
ControlWord club_control_word(const ClubTerm& t);

/// Index sets as sorted integer lists (big-endian dit strings).
struct ZeroPatternSets {
  std::size_t j = 0;  // 1-based step
  std::vector<std::uint64_t> r1, r2, r3;

  std::vector<std::uint64_t> all() const;  // sorted union
};

/// Sets for the j-th term (1 <= j <= p).
ZeroPatternSets zero_pattern_sets(const ClubSequence& seq, std::size_t j);

/// Indices that may still be nonzero before step j; j = p + 1 gives {0}.
std::vector<bool> surviving_mask(const ClubSequence& seq, std::size_t j);

/// Indices c_1..c_{l-1} k 0..0 with k >= 1.
std::vector<std::uint64_t> zeroed_set(const ClubSequence& seq, std::size_t j);

struct TransitionReport {
  bool holds = false;
  bool boundary_case = false;  // c_{l-1} = d - 1 (or the final step)
  std::size_t zeroed = 0;
  std::string detail;
};

/// Checks S(j) = S(j+1) disjoint-union Z(j); j = p compares against {0}.
TransitionReport transition_check(const ClubSequence& seq, std::size_t j);

struct OrbitReport {
  bool holds = false;
  bool r1_disjoint_from_match = false;
  bool sets_disjoint = false;
  std::string detail;
};

/// Z/dZ action on the target dit keeps (R1 u R2 u R3) n S[C(j)] inside itself.
OrbitReport orbit_closure_check(const ClubSequence& seq, std::size_t j);

/// At j = 1 the three sets partition the full index set.
bool coverage_check(const ClubSequence& seq);

}  // namespace qudsynth
