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


#include "qudsynth/state_synth.hpp"

#include <stdexcept>

namespace qudsynth {

Gate single_club_householder(const ClubTerm& t, std::span<const cplx> psi_j, int d, int n,
                             double elide_tol) {
  if (t.letters.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("term length != n");
  const ControlWord word = club_control_word(t);  // throws for a term without a club
  const std::size_t ell = t.leftmost_club();
  std::vector<int> digits(t.letters.begin(), t.letters.begin() + ell);
  digits.push_back(0);
  digits.resize(n, 0);
  const std::uint64_t stride = checked_pow(d, n - 1 - static_cast<int>(ell));
  const std::uint64_t base = from_digits(digits, d);
  if (psi_j.size() != checked_pow(d, n)) throw std::invalid_argument("state dimension != d^n");
  std::vector<cplx> fiber(d);
  for (int k = 0; k < d; ++k) fiber[k] = psi_j[base + k * stride];
  Matrix v = norm(fiber) == 0.0 ? Matrix::identity(d) : householder_to_e0(fiber);
  Gate g = make_gate(word, std::move(v), Level::kTwoQudit);
  g.elidable = is_identity(g.v, elide_tol);
  return g;
}

StateSynthResult club_householder(const StateVector& psi, std::span<const int> m, int d, int n,
                                  const StateSynthOptions& opts) {
  const std::uint64_t dim = checked_pow(d, n);
  if (psi.dim() != dim) throw std::invalid_argument("state dimension != d^n");
  if (m.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("target needs n dits");
  for (int x : m)
    if (x < 0 || x >= d) throw std::invalid_argument("target dit out of range");
  const double nrm = psi.norm();
  if (nrm == 0.0) throw std::invalid_argument("zero vector");

  // phi[x] = psi[x + m] digitwise, i.e. phi = (tensor INC^{-m_q}) psi.
  StateVector phi(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    auto digits = to_digits(x, d, n);
    for (int q = 0; q < n; ++q) digits[q] = (digits[q] + m[q]) % d;
    phi[x] = psi[from_digits(digits, d)];
  }

  StateSynthResult out;
  out.circuit = Circuit(d, n);
  out.trace.target.assign(m.begin(), m.end());
  out.trace.norm = nrm;
  for_each_club_term(d, n, [&](const ClubTerm& t) {
    Gate g = single_club_householder(t, phi.amplitudes(), d, n, opts.elide_tol);
    apply_gate(g, phi.amplitudes(), d, n);
    Gate emitted = inc_conjugate_gate(g, m, d);
    out.circuit.push(emitted);
    SynthesisStep step{t, std::move(emitted), std::nullopt};
    if (opts.keep_snapshots) step.snapshot = phi;
    out.trace.steps.push_back(std::move(step));
  });
  const cplx s = phi[0];
  out.trace.residual_phase = std::abs(s) > 0.0 ? s / std::abs(s) : cplx{1.0};
  if (opts.fix_phase) {
    Matrix ph = Matrix::identity(d);
    ph *= std::conj(out.trace.residual_phase);
    Gate g = make_local(n, 0, std::move(ph));
    g.level = Level::kTwoQudit;
    out.circuit.push(std::move(g));
  }
  return out;
}

Circuit state_prep_circuit(const StateVector& psi, int d, int n, bool fix_phase) {
  const std::vector<int> zero(n, 0);
  StateSynthOptions opts;
  opts.fix_phase = fix_phase;
  return club_householder(psi, zero, d, n, opts).circuit.adjoint();
}

}  // namespace qudsynth
