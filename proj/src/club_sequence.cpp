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


#include "qudsynth/club_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace qudsynth {

std::size_t ClubTerm::leftmost_club() const {
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] == kClub) return i;
  throw std::invalid_argument("club term has no club letter");
}

std::string ClubTerm::to_string(bool pretty) const {
  std::string out;
  bool wide = false;
  for (int x : letters) wide = wide || x >= 10;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (wide && i > 0) out += ' ';
    if (letters[i] == kClub) {
      out += pretty ? "♣" : "c";
    } else {
      out += std::to_string(letters[i]);
    }
  }
  return out;
}

std::uint64_t club_sequence_length(int d, int n, std::uint64_t cap) {
  if (d < 2 || n < 1) throw std::invalid_argument("club sequence needs d >= 2 and n >= 1");
  std::uint64_t p = 0;
  std::uint64_t power = 1;
  for (int i = 0; i < n; ++i) {
    p += power;
    if (p > cap) throw std::overflow_error("club sequence length exceeds the cap");
    power *= static_cast<std::uint64_t>(d);
  }
  return p;
}

namespace {

void emit_terms(int d, int n, std::vector<int>& prefix,
                const std::function<void(const ClubTerm&)>& fn) {
  const int remaining = n - static_cast<int>(prefix.size());
  if (remaining > 1) {
    for (int q = 0; q < d; ++q) {
      prefix.push_back(q);
      emit_terms(d, n, prefix, fn);
      prefix.pop_back();
    }
  }
  ClubTerm t;
  t.letters = prefix;
  t.letters.resize(n, kClub);
  fn(t);
}

}  // namespace

void for_each_club_term(int d, int n, const std::function<void(const ClubTerm&)>& fn) {
  if (d < 2 || n < 1) throw std::invalid_argument("club sequence needs d >= 2 and n >= 1");
  std::vector<int> prefix;
  emit_terms(d, n, prefix, fn);
}

ClubSequence make_club_sequence(int d, int n, std::uint64_t cap) {
  ClubSequence seq;
  seq.d = d;
  seq.n = n;
  seq.terms.reserve(club_sequence_length(d, n, cap));
  for_each_club_term(d, n, [&](const ClubTerm& t) { seq.terms.push_back(t); });
  return seq;
}

ControlWord club_control_word(const ClubTerm& t) {
  const std::size_t ell = t.leftmost_club();
  std::vector<int> letters(t.letters.size(), ControlWord::kAny);
  letters[ell] = ControlWord::kTarget;
  for (std::size_t q = ell; q-- > 0;) {
    if (t.letters[q] > 0) {
      letters[q] = t.letters[q];
      break;
    }
  }
  return ControlWord(std::move(letters));
}

// ---------------------------------------------------------------------------
// Zero-pattern sets

namespace {

const ClubTerm& term_at(const ClubSequence& seq, std::size_t j) {
  if (j < 1 || j > seq.terms.size()) throw std::out_of_range("step index out of range");
  return seq.terms[j - 1];
}

// c_1..c_q k 0..0 as an integer.
std::uint64_t padded(std::span<const int> head, int k, int d, int n) {
  std::vector<int> digits(head.begin(), head.end());
  digits.push_back(k);
  digits.resize(n, 0);
  return from_digits(digits, d);
}

std::vector<std::uint64_t> sorted_union(std::vector<std::uint64_t> a,
                                        const std::vector<std::uint64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

std::vector<std::uint64_t> ZeroPatternSets::all() const {
  return sorted_union(sorted_union(r1, r2), r3);
}

ZeroPatternSets zero_pattern_sets(const ClubSequence& seq, std::size_t j) {
  const ClubTerm& t = term_at(seq, j);
  const int d = seq.d;
  const int n = seq.n;
  const std::size_t ell = t.leftmost_club();  // 0-based; prefix c_1..c_ell
  const std::span<const int> c(t.letters.data(), ell);
  ZeroPatternSets out;
  out.j = j;
  for (std::size_t q = 0; q + 1 <= ell; ++q)
    for (int k = 0; k < c[q]; ++k) out.r1.push_back(padded(c.first(q), k, d, n));
  for (int k = 0; k < d; ++k) out.r2.push_back(padded(c, k, d, n));
  const std::uint64_t dim = checked_pow(d, n);
  const std::uint64_t tail = checked_pow(d, n - static_cast<int>(ell));
  const std::uint64_t cval = from_digits(c, d);
  for (std::uint64_t x = 0; x < dim; ++x)
    if (x / tail > cval) out.r3.push_back(x);
  std::sort(out.r1.begin(), out.r1.end());
  std::sort(out.r2.begin(), out.r2.end());
  return out;
}

std::vector<bool> surviving_mask(const ClubSequence& seq, std::size_t j) {
  const std::uint64_t dim = checked_pow(seq.d, seq.n);
  std::vector<bool> mask(dim, false);
  if (j == seq.terms.size() + 1) {
    mask[0] = true;
    return mask;
  }
  for (std::uint64_t x : zero_pattern_sets(seq, j).all()) mask[x] = true;
  return mask;
}

std::vector<std::uint64_t> zeroed_set(const ClubSequence& seq, std::size_t j) {
  const ClubTerm& t = term_at(seq, j);
  const std::size_t ell = t.leftmost_club();
  const std::span<const int> c(t.letters.data(), ell);
  std::vector<std::uint64_t> z;
  for (int k = 1; k < seq.d; ++k) z.push_back(padded(c, k, seq.d, seq.n));
  return z;
}

TransitionReport transition_check(const ClubSequence& seq, std::size_t j) {
  const std::size_t p = seq.terms.size();
  if (j < 1 || j > p) throw std::out_of_range("step index out of range");
  TransitionReport rep;
  const ZeroPatternSets now = zero_pattern_sets(seq, j);
  const auto lhs = now.all();
  std::vector<std::uint64_t> next;
  if (j == p) {
    next = {0};
    rep.boundary_case = true;
  } else {
    next = zero_pattern_sets(seq, j + 1).all();
    const ClubTerm& t = term_at(seq, j);
    const std::size_t ell = t.leftmost_club();
    rep.boundary_case = ell > 0 && t.letters[ell - 1] == seq.d - 1;
  }
  const auto z = zeroed_set(seq, j);
  rep.zeroed = z.size();
  const auto rhs = sorted_union(next, z);
  const bool lhs_distinct = std::adjacent_find(lhs.begin(), lhs.end()) == lhs.end();
  const bool rhs_distinct = std::adjacent_find(rhs.begin(), rhs.end()) == rhs.end();
  rep.holds = lhs_distinct && rhs_distinct && lhs == rhs &&
              rep.zeroed == static_cast<std::size_t>(seq.d - 1);
  if (!rep.holds) {
    rep.detail = "step " + std::to_string(j) + ": |S(j)| = " + std::to_string(lhs.size()) +
                 ", |S(j+1)| + |Z| = " + std::to_string(rhs.size());
  }
  return rep;
}

OrbitReport orbit_closure_check(const ClubSequence& seq, std::size_t j) {
  const ClubTerm& t = term_at(seq, j);
  const int d = seq.d;
  const int n = seq.n;
  const ControlWord word = club_control_word(t);
  const ZeroPatternSets sets = zero_pattern_sets(seq, j);
  const std::uint64_t dim = checked_pow(d, n);
  std::vector<int> member(dim, 0);
  for (auto x : sets.r1) ++member[x];
  for (auto x : sets.r2) ++member[x];
  for (auto x : sets.r3) ++member[x];

  OrbitReport rep;
  rep.sets_disjoint = std::all_of(member.begin(), member.end(), [](int m) { return m <= 1; }) &&
                      sets.r2.size() == static_cast<std::size_t>(d);
  rep.r1_disjoint_from_match = std::none_of(sets.r1.begin(), sets.r1.end(), [&](std::uint64_t x) {
    return word.matches(to_digits(x, d, n));
  });
  const std::size_t tpos = word.target();
  bool closed = true;
  for (std::uint64_t x = 0; x < dim && closed; ++x) {
    if (!member[x]) continue;
    auto digits = to_digits(x, d, n);
    if (!word.matches(digits)) continue;
    const int base = digits[tpos];
    for (int c = 1; c < d; ++c) {
      digits[tpos] = (base + c) % d;
      const std::uint64_t y = from_digits(digits, d);
      if (!member[y] || !word.matches(digits)) {
        closed = false;
        rep.detail = "orbit of " + std::to_string(x) + " leaves the set at step " + std::to_string(j);
        break;
      }
    }
  }
  rep.holds = closed && rep.sets_disjoint && rep.r1_disjoint_from_match;
  return rep;
}

bool coverage_check(const ClubSequence& seq) {
  const auto all = zero_pattern_sets(seq, 1).all();
  const std::uint64_t dim = checked_pow(seq.d, seq.n);
  if (all.size() != dim) return false;
  for (std::uint64_t x = 0; x < dim; ++x)
    if (all[x] != x) return false;
  return true;
}

}  // namespace qudsynth
