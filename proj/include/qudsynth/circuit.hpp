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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qudsynth/linalg.hpp"

namespace qudsynth {

/// d^n with an overflow check against `cap` (0 means 2^62).
std::uint64_t checked_pow(std::uint64_t d, int n, std::uint64_t cap = 0);

/// Big-endian d-ary digits: digits[0] is qudit 1 (most significant).
std::vector<int> to_digits(std::uint64_t index, int d, int n);
std::uint64_t from_digits(std::span<const int> digits, int d);

/// INC^power = sum |j+power mod d><j|.
Matrix inc_matrix(int d, int power = 1);
/// Transposition of basis states j and k.
Matrix flip_matrix(int d, int j, int k);

/// Length-n word over {0..d-1, *, T}; exactly one T.
class ControlWord {
 public:
  static constexpr int kAny = -1;
  static constexpr int kTarget = -2;

  ControlWord() = default;
  explicit ControlWord(std::vector<int> letters);

  /// Letters "0-9*T"; space-separated tokens are required when d > 10.
  static ControlWord parse(const std::string& text, int d);
  std::string to_string(int d) const;

  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  std::size_t target() const { return target_; }
  int num_controls() const;
  std::vector<std::size_t> control_positions() const;
  bool matches(std::span<const int> digits) const;

  void validate(int d, int n) const;

  bool operator==(const ControlWord&) const = default;

 private:
  std::vector<int> letters_;
  std::size_t target_ = 0;
};

enum class Level { kControlled, kTwoQudit, kCincLowered };

enum class PrimitiveKind { kCinc, kCincInv, kIncPower, kFlip, kLocal, kPhase };

struct Primitive {
  PrimitiveKind kind = PrimitiveKind::kLocal;
  int a = 0;  // INC_POWER exponent, or first FLIP index
  int b = 0;  // second FLIP index

  std::string to_string() const;
  static Primitive parse(const std::string& text);
  bool operator==(const Primitive&) const = default;
};

std::string level_name(Level level);
Level parse_level(const std::string& text);

/// Controlled one-qudit gate: applies v to the target when the controls match.
struct Gate {
  ControlWord word;
  Matrix v;
  Level level = Level::kControlled;
  std::optional<Primitive> primitive;
  bool elidable = false;

  int num_controls() const { return word.num_controls(); }
  bool is(PrimitiveKind kind) const { return primitive && primitive->kind == kind; }
  Gate adjoint() const;
  void validate(int d, int n) const;
};

struct Circuit {
  int d = 2;
  int n = 1;
  std::vector<Gate> gates;
  std::vector<std::string> metadata;

  Circuit() = default;
  Circuit(int d_, int n_) : d(d_), n(n_) {}

  void append(const Circuit& other);
  void push(Gate g) { gates.push_back(std::move(g)); }
  /// Reversed order, every gate adjointed.
  Circuit adjoint() const;
  /// Copy with elidable gates removed.
  Circuit without_elidable() const;
  void validate() const;
};

// Gate factories.
Gate make_gate(ControlWord word, Matrix v, Level level = Level::kControlled,
               std::optional<Primitive> primitive = std::nullopt);
Gate make_local(int n, int qudit, Matrix v, PrimitiveKind kind = PrimitiveKind::kLocal);
/// CINC (or CINC^-1) firing on |d-1> of `control`.
Gate make_cinc(int d, int n, int control, int target, bool inverse = false);
/// Singly-controlled gate with explicit control value.
Gate make_controlled(int n, int control, int value, int target, Matrix v,
                     Level level = Level::kTwoQudit,
                     std::optional<Primitive> primitive = std::nullopt);

/// In-place application of one gate to an n-qudit ket.
void apply_gate(const Gate& g, std::span<cplx> psi, int d, int n);
StateVector apply_gate(const Gate& g, const StateVector& psi, int d, int n);
/// Left-multiplies every column of m (dim d^n rows) by the gate.
void apply_gate_rows(const Gate& g, Matrix& m, int d, int n);
StateVector simulate(const Circuit& c, const StateVector& psi);

constexpr std::uint64_t kDefaultDimCap = 4096;

/// Full unitary of the circuit; gates[0] acts first.
Matrix circuit_unitary(const Circuit& c, std::uint64_t cap = kDefaultDimCap);
Matrix gate_unitary(const Gate& g, int d, int n, std::uint64_t cap = kDefaultDimCap);

/// Permutation matrix exchanging qudits j and k (0-based positions).
Matrix qudit_swap_matrix(int j, int k, int d, int n);

/// Relabels positions j and last (0-based): the target at j moves to the last
/// line, so gate(g) = swap * gate(result) * swap.
Gate swap_conjugate(const Gate& g, int j, int n);

/// (tensor INC^{m_k}) gate (tensor INC^{-m_k}): control letters shift by m_k
/// mod d, v becomes INC^{m_t} v INC^{-m_t}.
Gate inc_conjugate_gate(const Gate& g, std::span<const int> m_dits, int d);

struct GateCounts {
  std::map<int, std::uint64_t> per_arity;
  std::uint64_t total = 0;
  std::uint64_t cinc = 0;
  std::uint64_t cinc_inv = 0;
  std::uint64_t local = 0;
  std::uint64_t flip = 0;
  std::uint64_t elided = 0;

  std::uint64_t arity(int k) const {
    auto it = per_arity.find(k);
    return it == per_arity.end() ? 0 : it->second;
  }
};

/// Tallies non-elidable gates by control count and primitive tag.
GateCounts gate_counts(const Circuit& c);

/// True when v equals the identity within tol.
bool is_identity(const Matrix& v, double tol = 1e-12);

}  // namespace qudsynth
