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

#include <algorithm>

#include "qudsynth/club_sequence.hpp"

namespace qudsynth {
namespace {

std::vector<std::string> words(const ClubSequence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.terms) out.push_back(t.to_string());
  return out;
}

std::uint64_t idx(const std::string& digits, int d) {
  std::uint64_t v = 0;
  for (char ch : digits) v = v * d + static_cast<std::uint64_t>(ch - '0');
  return v;
}

TEST(ClubSequence, QutritPair) {
  EXPECT_EQ(words(make_club_sequence(3, 2)), (std::vector<std::string>{"0c", "1c", "2c", "cc"}));
}

TEST(ClubSequence, QubitPair) {
  EXPECT_EQ(words(make_club_sequence(2, 2)), (std::vector<std::string>{"0c", "1c", "cc"}));
}

TEST(ClubSequence, QutritTriple) {
  const auto w = words(make_club_sequence(3, 3));
  ASSERT_EQ(w.size(), 13u);
  EXPECT_EQ(std::vector<std::string>(w.begin(), w.begin() + 4),
            (std::vector<std::string>{"00c", "01c", "02c", "0cc"}));
  EXPECT_EQ(w.back(), "ccc");
}

TEST(ClubSequence, PrettyUsesGlyph) {
  EXPECT_EQ(make_club_sequence(2, 1).terms[0].to_string(true), "♣");
}

TEST(ClubSequence, LengthAndRecursiveStructure) {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const ClubSequence s = make_club_sequence(d, n);
      ASSERT_EQ(s.terms.size(), club_sequence_length(d, n));
      EXPECT_TRUE(std::all_of(s.terms.back().letters.begin(), s.terms.back().letters.end(),
                              [](int l) { return l == kClub; }));
      for (const auto& t : s.terms) {
        // clubs form a nonempty suffix
        const std::size_t l = t.leftmost_club();
        ASSERT_LT(l, t.letters.size());
        for (std::size_t i = l; i < t.letters.size(); ++i) EXPECT_EQ(t.letters[i], kClub);
      }
      if (n == 1) continue;
      const ClubSequence sub = make_club_sequence(d, n - 1);
      std::size_t pos = 0;
      for (int q = 0; q < d; ++q) {
        for (const auto& t : sub.terms) {
          EXPECT_EQ(s.terms[pos].letters[0], q);
          EXPECT_TRUE(std::equal(t.letters.begin(), t.letters.end(), s.terms[pos].letters.begin() + 1));
          ++pos;
        }
      }
      EXPECT_EQ(pos + 1, s.terms.size());
    }
  }
}

TEST(ClubSequence, StreamingMatchesMaterialized) {
  const ClubSequence s = make_club_sequence(3, 4);
  std::size_t i = 0;
  for_each_club_term(3, 4, [&](const ClubTerm& t) { EXPECT_EQ(t, s.terms[i++]); });
  EXPECT_EQ(i, s.terms.size());
}

TEST(ClubSequence, CapGuard) {
  EXPECT_THROW(make_club_sequence(2, 30, 1000), std::overflow_error);
  EXPECT_THROW(make_club_sequence(1, 3), std::invalid_argument);
}

TEST(ControlWordFromTerm, FigureExample) {
  // 2100ccc, d = 3: T on line 5, control value 1 on line 2
  const ClubTerm t{{2, 1, 0, 0, kClub, kClub, kClub}};
  EXPECT_EQ(club_control_word(t).to_string(3), "*1**T**");
}

TEST(ControlWordFromTerm, AllZeroPrefixHasNoControl) {
  const ClubTerm t{{0, 0, 0, kClub}};
  EXPECT_EQ(club_control_word(t).num_controls(), 0);
}

TEST(ZeroPattern, FirstStep) {
  for (int d = 2; d <= 4; ++d) {
    const int n = 3;
    const ClubSequence s = make_club_sequence(d, n);
    const ZeroPatternSets z = zero_pattern_sets(s, 1);
    EXPECT_TRUE(z.r1.empty());
    ASSERT_EQ(z.r2.size(), static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) EXPECT_EQ(z.r2[k], static_cast<std::uint64_t>(k));  // 00k
    // r3: a nonzero among the first n-1 dits
    const std::uint64_t dim = checked_pow(d, n);
    std::vector<std::uint64_t> expect;
    for (std::uint64_t x = 0; x < dim; ++x)
      if (x / d != 0) expect.push_back(x);
    EXPECT_EQ(z.r3, expect);
  }
}

TEST(ZeroPattern, FinalStep) {
  const ClubSequence s = make_club_sequence(3, 3);
  const ZeroPatternSets z = zero_pattern_sets(s, s.terms.size());
  EXPECT_TRUE(z.r3.empty());
  EXPECT_EQ(z.all(), (std::vector<std::uint64_t>{idx("000", 3), idx("100", 3), idx("200", 3)}));
}

TEST(ZeroPattern, QutritOneClubClub) {
  const ClubSequence s = make_club_sequence(3, 3);
  std::size_t j = 0;
  for (std::size_t i = 0; i < s.terms.size(); ++i)
    if (s.terms[i].to_string() == "1cc") j = i + 1;
  ASSERT_GT(j, 0u);
  const ZeroPatternSets z = zero_pattern_sets(s, j);
  EXPECT_EQ(z.r2, (std::vector<std::uint64_t>{idx("100", 3), idx("110", 3), idx("120", 3)}));
}

TEST(ZeroPattern, InvariantsEverywhere) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {4, 2}, {2, 2}}) {
    const ClubSequence s = make_club_sequence(d, n);
    for (std::size_t j = 1; j <= s.terms.size(); ++j) {
      const ZeroPatternSets z = zero_pattern_sets(s, j);
      EXPECT_EQ(z.r2.size(), static_cast<std::size_t>(d));
      const auto u = z.all();
      EXPECT_EQ(u.size(), z.r1.size() + z.r2.size() + z.r3.size()) << "not disjoint at j=" << j;
    }
  }
}

TEST(ZeroPattern, TransitionsHoldExhaustively) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {4, 2}, {2, 3}}) {
    const ClubSequence s = make_club_sequence(d, n);
    bool saw_boundary = false, saw_plain = false;
    for (std::size_t j = 1; j <= s.terms.size(); ++j) {
      const TransitionReport r = transition_check(s, j);
      EXPECT_TRUE(r.holds) << d << "," << n << " j=" << j << ": " << r.detail;
      (r.boundary_case ? saw_boundary : saw_plain) = true;
      const OrbitReport o = orbit_closure_check(s, j);
      EXPECT_TRUE(o.holds) << o.detail;
      EXPECT_TRUE(o.r1_disjoint_from_match);
      EXPECT_TRUE(o.sets_disjoint);
    }
    EXPECT_TRUE(saw_boundary);
    EXPECT_TRUE(saw_plain);
    EXPECT_TRUE(coverage_check(s));
  }
}

TEST(ZeroPattern, ZeroedSetSizes) {
  const ClubSequence s = make_club_sequence(3, 3);
  for (std::size_t j = 1; j <= s.terms.size(); ++j) EXPECT_EQ(zeroed_set(s, j).size(), 2u);
}

}  // namespace
}  // namespace qudsynth
