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


#include "qudsynth/count_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qudsynth {

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("count overflow");
  return a + b;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("count overflow");
  }
  return a * b;
}

std::uint64_t upow(std::uint64_t d, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out = mul(out, d);
  return out;
}

void check_d(int d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
}

CostPair operator+(CostPair a, CostPair b) { return {add(a.cinc, b.cinc), add(a.cinc_inv, b.cinc_inv)}; }
CostPair scale(std::uint64_t s, CostPair a) { return {mul(s, a.cinc), mul(s, a.cinc_inv)}; }

}  // namespace

CostPair inc_cost(int k, int d) {
  check_d(d);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::uint64_t ud = d;
  if (k == 1) return {1, 0};
  if (k == 2) return {ud * ud + 2 * ud, ud * ud + ud};
  const int lo = (k + 1) / 2;
  const int hi = k + 1 - lo;
  return scale(ud, inc_cost(hi, d) + inc_cost(lo, d));
}

CostPair controlled_cost(int k, int d) {
  check_d(d);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const std::uint64_t ud = d;
  if (k == 0) return {0, 0};
  if (k == 1) return {ud, ud};
  return scale(ud, inc_cost(k - 1, d)) + controlled_cost(k - 1, d) + CostPair{ud * ud, ud * ud};
}

ClosedFormCounts closed_form_counts_c(int n, int d) {
  check_d(d);
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  ClosedFormCounts out;
  const double dd = d;
  const double l2 = std::log2(dd);
  out.c = controlled_cost(n - 1, d);
  const double bracket = std::pow(n + 1.0, 2.0 + l2) - 4.0 * dd * dd;
  const double lead = 2.0 * dd * dd / (2.0 + l2) * bracket;
  out.c_bound = lead * (dd * dd + 2.0 * dd) + (n - 2.0) * dd * dd + 2.0 * dd;
  out.c_inv_bound = lead * (dd * dd + dd) + (n - 2.0) * dd * dd + dd;
  out.c_ok = static_cast<double>(out.c.cinc) <= out.c_bound;
  out.c_inv_ok = static_cast<double>(out.c.cinc_inv) <= out.c_inv_bound;
  if (n >= 3) {
    out.b = inc_cost(n - 2, d);
    const double growth = 2.0 * dd * std::pow(static_cast<double>(n), 1.0 + l2);
    out.b_bound = (dd * dd + 2.0 * dd) * growth;
    out.b_inv_bound = (dd * dd + dd) * growth;
    out.b_ok = static_cast<double>(out.b.cinc) <= out.b_bound &&
               static_cast<double>(out.b.cinc_inv) <= out.b_inv_bound;
  }
  return out;
}

std::uint64_t club_count(int n, int d) {
  check_d(d);
  std::uint64_t p = 0;
  for (int i = 0; i < n; ++i) p = add(p, upow(d, i));
  return p;
}

std::uint64_t h_count(int n, int k, int d) {
  if (n < 1) return 0;
  if (k == 0) return static_cast<std::uint64_t>(n);
  if (k == 1) return club_count(n, d) - static_cast<std::uint64_t>(n);
  return 0;
}

std::uint64_t g_count(int n, int k, int d) {
  check_d(d);
  if (n < 2 || k < 0) return 0;
  const std::uint64_t ud = d;
  std::uint64_t out = 0;
  if (k == n - 1) out = upow(ud, n) - upow(ud, n - 1);
  if (k >= 1) {
    // (1/2) d (d-1) d^{n-1} h(n-1, k-1); d(d-1) is even.
    const std::uint64_t blocks = ud * (ud - 1) / 2;
    out = add(out, mul(mul(blocks, upow(ud, n - 1)), h_count(n - 1, k - 1, d)));
  }
  return out;
}

std::uint64_t f_count(int n, int k, int d) {
  check_d(d);
  if (n < 1 || k < 0) return 0;
  std::vector<std::vector<std::uint64_t>> f(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (int nn = 1; nn <= n; ++nn) {
    for (int kk = 0; kk <= k; ++kk) {
      if (kk == 0) {
        f[nn][kk] = 1;
      } else if (nn == 1) {
        f[nn][kk] = 0;
      } else {
        f[nn][kk] = add(add(g_count(nn, kk, d), f[nn - 1][kk]),
                        mul(static_cast<std::uint64_t>(d - 1), f[nn - 1][kk - 1]));
      }
    }
  }
  return f[n][k];
}

double f_bound(int n, int k, int d) { return std::pow(static_cast<double>(d), 2.0 * n - k + 4.0); }

CostPair triangle_counts(int d, int n) {
  check_d(d);
  const std::uint64_t dn = upow(d, n);
  CostPair out = scale(dn, controlled_cost(n - 1, d));
  for (int k = 0; k <= n - 1; ++k) out = out + scale(f_count(n, k, d), controlled_cost(k, d));
  return out;
}

CostPair spectral_counts(int d, int n) {
  check_d(d);
  const std::uint64_t dn = upow(d, n);
  const std::uint64_t house = mul(2 * static_cast<std::uint64_t>(d), h_count(n, 1, d));
  const CostPair phase = controlled_cost(n - 1, d);
  return scale(dn, CostPair{house, house} + phase);
}

double ell_t_bound(int d, int n) {
  const double dd = d;
  return 2.0 * std::pow(n + 1.0, 2.0 + std::log2(dd)) * std::pow(dd, n + 4.0) +
         26.0 * std::pow(dd, 8.0 + 2.0 * n);
}

double ell_s_bound(int d, int n) {
  const double dd = d;
  const double p = (std::pow(dd, n) - 1.0) / (dd - 1.0);
  return 2.0 * std::pow(dd, n + 1.0) * (p - n) +
         std::pow(n + 1.0, 2.0 + std::log2(dd)) * std::pow(dd, n + 4.0);
}

double polylog_negative(int s, double x) {
  if (!(std::abs(x) < 1.0)) throw std::invalid_argument("polylog series needs |x| < 1");
  double sum = 0.0;
  for (int k = 1; k < 100000; ++k) {
    const double term = std::pow(static_cast<double>(k), s) * std::pow(x, k);
    sum += term;
    if (k > s && std::abs(term) < 1e-16 * std::abs(sum)) break;
  }
  return sum;
}

CountModel count_model(int d, int n) {
  check_d(d);
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  CountModel m;
  m.d = d;
  m.n = n;
  m.f_bound_holds = true;
  for (int nn = 1; nn <= n; ++nn) {
    for (int k = 0; k <= nn; ++k) {
      m.h[{nn, k}] = h_count(nn, k, d);
      m.g[{nn, k}] = g_count(nn, k, d);
      const std::uint64_t f = f_count(nn, k, d);
      m.f[{nn, k}] = f;
      if (static_cast<double>(f) > f_bound(nn, k, d)) m.f_bound_holds = false;
    }
  }
  m.ell_t = triangle_counts(d, n);
  m.ell_s = spectral_counts(d, n);
  m.ell_t_bound = ell_t_bound(d, n);
  m.ell_s_bound = ell_s_bound(d, n);
  return m;
}

}  // namespace qudsynth
