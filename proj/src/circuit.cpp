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


#include "qudsynth/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qudsynth {

std::uint64_t checked_pow(std::uint64_t d, int n, std::uint64_t cap) {
  if (n < 0) throw std::invalid_argument("negative exponent");
  const std::uint64_t limit = cap == 0 ? (std::uint64_t{1} << 62) : cap;
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) {
    if (d != 0 && out > limit / d) {
      throw std::overflow_error("d^n exceeds the configured cap");
    }
    out *= d;
  }
  if (out > limit) throw std::overflow_error("d^n exceeds the configured cap");
  return out;
}

std::vector<int> to_digits(std::uint64_t index, int d, int n) {
  std::vector<int> out(n);
  for (int i = n - 1; i >= 0; --i) {
    out[i] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}

std::uint64_t from_digits(std::span<const int> digits, int d) {
  std::uint64_t out = 0;
  for (int x : digits) out = out * d + static_cast<std::uint64_t>(x);
  return out;
}

Matrix inc_matrix(int d, int power) {
  Matrix m(d, d);
  const int p = ((power % d) + d) % d;
  for (int j = 0; j < d; ++j) m((j + p) % d, j) = 1.0;
  return m;
}

Matrix flip_matrix(int d, int j, int k) {
  if (j < 0 || k < 0 || j >= d || k >= d || j == k) {
    throw std::invalid_argument("flip indices out of range");
  }
  Matrix m = Matrix::identity(d);
  m(j, j) = 0.0;
  m(k, k) = 0.0;
  m(j, k) = 1.0;
  m(k, j) = 1.0;
  return m;
}

bool is_identity(const Matrix& v, double tol) {
  if (!v.is_square()) return false;
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (std::size_t c = 0; c < v.cols(); ++c)
      if (std::abs(v(r, c) - (r == c ? cplx{1.0} : cplx{})) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ControlWord

ControlWord::ControlWord(std::vector<int> letters) : letters_(std::move(letters)) {
  int targets = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == kTarget) {
      ++targets;
      target_ = i;
    } else if (letters_[i] < kTarget) {
      throw std::invalid_argument("invalid control letter");
    }
  }
  if (targets != 1) throw std::invalid_argument("control word needs exactly one T");
}

ControlWord ControlWord::parse(const std::string& text, int d) {
  std::vector<int> letters;
  auto letter = [&](const std::string& tok) {
    if (tok == "*") return kAny;
    if (tok == "T") return kTarget;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad control letter '" + tok + "'");
    }
    if (pos != tok.size() || v < 0 || v >= d) {
      throw std::invalid_argument("bad control letter '" + tok + "'");
    }
    return v;
  };
  if (text.find(' ') != std::string::npos) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) letters.push_back(letter(tok));
  } else {
    if (d > 10) {
      for (char ch : text)
        if (ch != '*' && ch != 'T') throw std::invalid_argument("d > 10 needs space-separated words");
    }
    for (char ch : text) letters.push_back(letter(std::string(1, ch)));
  }
  return ControlWord(std::move(letters));
}

std::string ControlWord::to_string(int d) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (d > 10 && i > 0) out += ' ';
    const int x = letters_[i];
    if (x == kAny) {
      out += '*';
    } else if (x == kTarget) {
      out += 'T';
    } else {
      out += std::to_string(x);
    }
  }
  return out;
}

int ControlWord::num_controls() const {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                        [](int x) { return x >= 0; }));
}

std::vector<std::size_t> ControlWord::control_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] >= 0) out.push_back(i);
  return out;
}

bool ControlWord::matches(std::span<const int> digits) const {
  if (digits.size() != letters_.size()) throw std::invalid_argument("digit string length mismatch");
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] >= 0 && digits[i] != letters_[i]) return false;
  return true;
}

void ControlWord::validate(int d, int n) const {
  if (static_cast<int>(letters_.size()) != n) throw std::invalid_argument("control word length != n");
  for (int x : letters_)
    if (x >= d) throw std::invalid_argument("control letter out of range");
}

// ---------------------------------------------------------------------------
// Primitive / Level

std::string Primitive::to_string() const {
  switch (kind) {
    case PrimitiveKind::kCinc: return "CINC";
    case PrimitiveKind::kCincInv: return "CINC_INV";
    case PrimitiveKind::kIncPower: return "INC_POWER(" + std::to_string(a) + ")";
    case PrimitiveKind::kFlip: return "FLIP(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case PrimitiveKind::kLocal: return "LOCAL";
    case PrimitiveKind::kPhase: return "PHASE";
  }
  return "LOCAL";
}

Primitive Primitive::parse(const std::string& text) {
  if (text == "CINC") return {PrimitiveKind::kCinc};
  if (text == "CINC_INV") return {PrimitiveKind::kCincInv};
  if (text == "LOCAL") return {PrimitiveKind::kLocal};
  if (text == "PHASE") return {PrimitiveKind::kPhase};
  int a = 0, b = 0;
  if (std::sscanf(text.c_str(), "INC_POWER(%d)", &a) == 1) return {PrimitiveKind::kIncPower, a};
  if (std::sscanf(text.c_str(), "FLIP(%d,%d)", &a, &b) == 2) return {PrimitiveKind::kFlip, a, b};
  throw std::invalid_argument("unknown primitive '" + text + "'");
}

std::string level_name(Level level) {
  switch (level) {
    case Level::kControlled: return "controlled";
    case Level::kTwoQudit: return "two-qudit";
    case Level::kCincLowered: return "cinc-lowered";
  }
  return "controlled";
}

Level parse_level(const std::string& text) {
  if (text == "controlled") return Level::kControlled;
  if (text == "two-qudit") return Level::kTwoQudit;
  if (text == "cinc-lowered") return Level::kCincLowered;
  throw std::invalid_argument("unknown level '" + text + "'");
}

// ---------------------------------------------------------------------------
// Gate / Circuit

Gate Gate::adjoint() const {
  Gate out = *this;
  out.v = v.adjoint();
  if (primitive) {
    switch (primitive->kind) {
      case PrimitiveKind::kCinc: out.primitive->kind = PrimitiveKind::kCincInv; break;
      case PrimitiveKind::kCincInv: out.primitive->kind = PrimitiveKind::kCinc; break;
      case PrimitiveKind::kIncPower: out.primitive->a = -primitive->a; break;
      default: break;
    }
  }
  return out;
}

void Gate::validate(int d, int n) const {
  word.validate(d, n);
  if (v.rows() != static_cast<std::size_t>(d) || v.cols() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("gate matrix is not d x d");
  }
  v.check_finite();
  if (!is_unitary(v, 1e-10)) throw std::invalid_argument("gate matrix is not unitary");
  const int k = num_controls();
  if (level == Level::kTwoQudit && k > 1) {
    throw std::invalid_argument("two-qudit gate with more than one control");
  }
  if (level == Level::kCincLowered) {
    if (k > 1) throw std::invalid_argument("cinc-lowered gate with more than one control");
    if (!primitive || (primitive->kind != PrimitiveKind::kCinc &&
                       primitive->kind != PrimitiveKind::kCincInv &&
                       primitive->kind != PrimitiveKind::kLocal)) {
      throw std::invalid_argument("cinc-lowered gate must be CINC, CINC_INV or LOCAL");
    }
  }
}

void Circuit::append(const Circuit& other) {
  if (other.d != d || other.n != n) throw std::invalid_argument("appending circuits of different shape");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit Circuit::adjoint() const {
  Circuit out(d, n);
  out.metadata = metadata;
  out.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.gates.push_back(it->adjoint());
  return out;
}

Circuit Circuit::without_elidable() const {
  Circuit out(d, n);
  out.metadata = metadata;
  for (const auto& g : gates)
    if (!g.elidable) out.gates.push_back(g);
  return out;
}

void Circuit::validate() const {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  for (const auto& g : gates) g.validate(d, n);
}

Gate make_gate(ControlWord word, Matrix v, Level level, std::optional<Primitive> primitive) {
  Gate g;
  g.word = std::move(word);
  g.v = std::move(v);
  g.level = level;
  g.primitive = primitive;
  return g;
}

Gate make_local(int n, int qudit, Matrix v, PrimitiveKind kind) {
  std::vector<int> letters(n, ControlWord::kAny);
  letters.at(qudit) = ControlWord::kTarget;
  return make_gate(ControlWord(std::move(letters)), std::move(v), Level::kCincLowered,
                   Primitive{kind});
}

Gate make_cinc(int d, int n, int control, int target, bool inverse) {
  std::vector<int> letters(n, ControlWord::kAny);
  letters.at(control) = d - 1;
  letters.at(target) = ControlWord::kTarget;
  return make_gate(ControlWord(std::move(letters)), inc_matrix(d, inverse ? -1 : 1),
                   Level::kCincLowered,
                   Primitive{inverse ? PrimitiveKind::kCincInv : PrimitiveKind::kCinc});
}

Gate make_controlled(int n, int control, int value, int target, Matrix v, Level level,
                     std::optional<Primitive> primitive) {
  std::vector<int> letters(n, ControlWord::kAny);
  letters.at(control) = value;
  letters.at(target) = ControlWord::kTarget;
  return make_gate(ControlWord(std::move(letters)), std::move(v), level, primitive);
}

// ---------------------------------------------------------------------------
// Simulation

namespace {

struct Strides {
  std::vector<std::uint64_t> s;  // s[i] = d^{n-1-i}
  std::uint64_t dim = 1;
};

Strides strides(int d, int n) {
  Strides out;
  out.s.resize(n);
  std::uint64_t acc = 1;
  for (int i = n - 1; i >= 0; --i) {
    out.s[i] = acc;
    acc *= d;
  }
  out.dim = acc;
  return out;
}

template <typename Fn>
void for_each_fiber(const Gate& g, int d, int n, Fn&& fn) {
  const Strides st = strides(d, n);
  const std::size_t t = g.word.target();
  const std::uint64_t ts = st.s[t];
  const auto ctrl = g.word.control_positions();
  const std::uint64_t outer = st.dim / (ts * d);
  for (std::uint64_t hi = 0; hi < outer; ++hi) {
    for (std::uint64_t lo = 0; lo < ts; ++lo) {
      const std::uint64_t base = hi * ts * d + lo;
      bool fire = true;
      for (std::size_t p : ctrl) {
        if (static_cast<int>((base / st.s[p]) % d) != g.word[p]) {
          fire = false;
          break;
        }
      }
      if (fire) fn(base, ts);
    }
  }
}

}  // namespace

void apply_gate(const Gate& g, std::span<cplx> psi, int d, int n) {
  if (g.word.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("gate word length != n");
  if (g.v.rows() != static_cast<std::size_t>(d)) throw std::invalid_argument("gate matrix is not d x d");
  if (psi.size() != checked_pow(d, n)) throw std::invalid_argument("state dimension != d^n");
  std::vector<cplx> fiber(d);
  for_each_fiber(g, d, n, [&](std::uint64_t base, std::uint64_t ts) {
    for (int k = 0; k < d; ++k) fiber[k] = psi[base + k * ts];
    for (int r = 0; r < d; ++r) {
      cplx s = 0.0;
      for (int k = 0; k < d; ++k) s += g.v(r, k) * fiber[k];
      psi[base + r * ts] = s;
    }
  });
}

StateVector apply_gate(const Gate& g, const StateVector& psi, int d, int n) {
  StateVector out = psi;
  apply_gate(g, out.amplitudes(), d, n);
  return out;
}

void apply_gate_rows(const Gate& g, Matrix& m, int d, int n) {
  if (g.word.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("gate word length != n");
  if (m.rows() != checked_pow(d, n)) throw std::invalid_argument("matrix rows != d^n");
  const std::size_t cols = m.cols();
  std::vector<cplx> fiber(static_cast<std::size_t>(d) * cols);
  for_each_fiber(g, d, n, [&](std::uint64_t base, std::uint64_t ts) {
    for (int k = 0; k < d; ++k)
      for (std::size_t c = 0; c < cols; ++c) fiber[k * cols + c] = m(base + k * ts, c);
    for (int r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        cplx s = 0.0;
        for (int k = 0; k < d; ++k) s += g.v(r, k) * fiber[k * cols + c];
        m(base + r * ts, c) = s;
      }
    }
  });
}

StateVector simulate(const Circuit& c, const StateVector& psi) {
  StateVector out = psi;
  for (const auto& g : c.gates) apply_gate(g, out.amplitudes(), c.d, c.n);
  return out;
}

Matrix circuit_unitary(const Circuit& c, std::uint64_t cap) {
  const std::uint64_t dim = checked_pow(c.d, c.n, cap);
  Matrix u = Matrix::identity(dim);
  for (const auto& g : c.gates) apply_gate_rows(g, u, c.d, c.n);
  return u;
}

Matrix gate_unitary(const Gate& g, int d, int n, std::uint64_t cap) {
  Circuit c(d, n);
  c.push(g);
  return circuit_unitary(c, cap);
}

Matrix qudit_swap_matrix(int j, int k, int d, int n) {
  const std::uint64_t dim = checked_pow(d, n);
  Matrix s(dim, dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    auto digits = to_digits(i, d, n);
    std::swap(digits.at(j), digits.at(k));
    s(from_digits(digits, d), i) = 1.0;
  }
  return s;
}

Gate swap_conjugate(const Gate& g, int j, int n) {
  if (j < 0 || j >= n) throw std::out_of_range("swap position out of range");
  if (g.word.target() != static_cast<std::size_t>(j)) {
    throw std::invalid_argument("swap_conjugate expects the target at position j");
  }
  std::vector<int> letters = g.word.letters();
  std::swap(letters[j], letters[n - 1]);
  Gate out = g;
  out.word = ControlWord(std::move(letters));
  return out;
}

Gate inc_conjugate_gate(const Gate& g, std::span<const int> m_dits, int d) {
  if (m_dits.size() != g.word.size()) throw std::invalid_argument("shift length != word length");
  std::vector<int> letters = g.word.letters();
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (letters[k] >= 0) letters[k] = (letters[k] + m_dits[k]) % d;
  Gate out = g;
  out.word = ControlWord(std::move(letters));
  const int mt = m_dits[g.word.target()];
  if (mt % d != 0) {
    out.v = inc_matrix(d, mt) * g.v * inc_matrix(d, -mt);
    // INC powers commute with the INC-type tags; a flip tag no longer describes v.
    if (out.is(PrimitiveKind::kFlip)) out.primitive.reset();
  }
  return out;
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts out;
  for (const auto& g : c.gates) {
    if (g.elidable) {
      ++out.elided;
      continue;
    }
    ++out.total;
    const int k = g.num_controls();
    ++out.per_arity[k];
    if (g.is(PrimitiveKind::kCinc)) ++out.cinc;
    else if (g.is(PrimitiveKind::kCincInv)) ++out.cinc_inv;
    else if (g.is(PrimitiveKind::kFlip)) ++out.flip;
    if (k == 0) ++out.local;
  }
  return out;
}

}  // namespace qudsynth
