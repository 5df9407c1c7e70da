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

#include "qudsynth/circuit.hpp"
#include "qudsynth/count_model.hpp"

namespace qudsynth {
namespace {

TEST(IncCost, BaseCases) {
  for (int d = 2; d <= 5; ++d) {
    const std::uint64_t dd = d;
    EXPECT_EQ(inc_cost(1, d), CostPair({1, 0}));
    EXPECT_EQ(inc_cost(2, d), CostPair({dd * dd + 2 * dd, dd * dd + dd}));
  }
}

TEST(IncCost, HalvingRecurrence) {
  for (int d = 2; d <= 4; ++d) {
    for (int k = 3; k <= 12; ++k) {
      const CostPair a = inc_cost((k + 2) / 2, d), b = inc_cost((k + 1) / 2, d);
      EXPECT_EQ(inc_cost(k, d).cinc, d * (a.cinc + b.cinc));
      EXPECT_EQ(inc_cost(k, d).cinc_inv, d * (a.cinc_inv + b.cinc_inv));
    }
  }
}

TEST(ControlledCost, SmallValues) {
  EXPECT_EQ(controlled_cost(0, 3), CostPair({0, 0}));
  EXPECT_EQ(controlled_cost(1, 3), CostPair({3, 3}));
  EXPECT_EQ(controlled_cost(2, 3), CostPair({15, 12}));
  EXPECT_EQ(controlled_cost(2, 2), CostPair({8, 6}));
}

TEST(ClosedForm, QutritBase) {
  const ClosedFormCounts c = closed_form_counts_c(3, 3);
  EXPECT_EQ(c.c, CostPair({15, 12}));
}

TEST(ClosedForm, BoundsHold) {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 3; n <= 10; ++n) {
      const ClosedFormCounts c = closed_form_counts_c(n, d);
      EXPECT_TRUE(c.c_ok) << d << "," << n;
      EXPECT_TRUE(c.c_inv_ok) << d << "," << n;
      EXPECT_TRUE(c.b_ok) << d << "," << n;
    }
  }
}

TEST(Hgf, ClosedFormValues) {
  EXPECT_EQ(h_count(3, 1, 3), 10u);
  for (int d = 2; d <= 4; ++d) {
    for (int n = 4; n <= 7; ++n) {
      const std::uint64_t dn = checked_pow(d, n), dd = d;
      EXPECT_EQ(g_count(n, n - 1, d), dn - dn / dd);
      EXPECT_EQ(g_count(n, 1, d), dn * (dd - 1) * (n - 1) / 2);
      EXPECT_EQ(g_count(n, 2, d), dn * (dn / dd - 1) / 2 - dn * (dd - 1) * (n - 1) / 2);
      EXPECT_EQ(g_count(n, 0, d), 0u);
    }
    // small n: the delta term and the Householder term land on the same k
    EXPECT_EQ(g_count(3, 2, d), checked_pow(d, 3) - checked_pow(d, 2) +
                                    checked_pow(d, 2) * (d * (d - 1) / 2) * h_count(2, 1, d));
    for (int n = 2; n <= 6; ++n) {
      EXPECT_EQ(h_count(n, 0, d), static_cast<std::uint64_t>(n));
      EXPECT_EQ(f_count(n, 0, d), 1u);
    }
    for (int k = 1; k < 4; ++k) EXPECT_EQ(f_count(1, k, d), 0u);
  }
}

TEST(Hgf, HistogramSumsMatchClubCounts) {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 6; ++n) {
      std::uint64_t h = 0;
      for (int k = 0; k < n; ++k) h += h_count(n, k, d);
      EXPECT_EQ(h, club_count(n, d));
    }
  }
}

TEST(Hgf, FBound) {
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 10; ++n)
      for (int k = 0; k < n; ++k)
        EXPECT_LE(static_cast<double>(f_count(n, k, d)), f_bound(n, k, d)) << d << n << k;
}

TEST(Totals, SmallTableValues) {
  EXPECT_EQ(triangle_counts(2, 2), CostPair({18, 18}));
  EXPECT_EQ(spectral_counts(2, 2), CostPair({24, 24}));
  EXPECT_EQ(spectral_counts(3, 3), CostPair({2025, 1944}));
  EXPECT_EQ(spectral_counts(2, 4), CostPair({1152, 1056}));
}

TEST(Totals, WithinAsymptoticBounds) {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 8; ++n) {
      EXPECT_LE(static_cast<double>(triangle_counts(d, n).cinc), ell_t_bound(d, n));
      EXPECT_LE(static_cast<double>(spectral_counts(d, n).cinc), ell_s_bound(d, n));
    }
  }
}

TEST(Polylog, KnownValues) {
  EXPECT_NEAR(polylog_negative(3, 0.5), 26.0, 1e-9);
  EXPECT_NEAR(polylog_negative(0, 0.5), 1.0, 1e-12);
  EXPECT_NEAR(polylog_negative(1, 0.5), 2.0, 1e-12);
}

TEST(CountModelStruct, Invariants) {
  const CountModel m = count_model(3, 4);
  EXPECT_EQ(m.f.at({4, 0}), 1u);
  EXPECT_TRUE(m.f_bound_holds);
  EXPECT_EQ(m.ell_t, triangle_counts(3, 4));
  EXPECT_EQ(m.ell_s, spectral_counts(3, 4));
}

TEST(Overflow, Guarded) {
  EXPECT_THROW(triangle_counts(5, 40), std::overflow_error);
}

}  // namespace
}  // namespace qudsynth
