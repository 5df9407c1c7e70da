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


#include "qudsynth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qudsynth/state_synth.hpp"

namespace qudsynth {

DensityMatrix::DensityMatrix(Matrix rho, double tol, double psd_tol) : rho_(std::move(rho)) {
  if (!rho_.is_square() || rho_.rows() == 0) throw std::invalid_argument("density matrix must be square");
  rho_.check_finite();
  if (hermiticity_error(rho_) >= tol) throw std::invalid_argument("density matrix is not Hermitian");
  cplx tr = 0.0;
  for (std::size_t i = 0; i < rho_.rows(); ++i) tr += rho_(i, i);
  if (std::abs(tr - 1.0) >= tol) throw std::invalid_argument("density matrix trace is not 1");
  const EigenSystem es = normal_eigendecomposition(rho_, EigenMode::kHermitian);
  for (const auto& l : es.eigenvalues)
    if (l.real() <= -psd_tol) throw std::invalid_argument("density matrix is not positive semidefinite");
}

namespace {

std::string declared_level(const Circuit& c) {
  for (auto it = c.metadata.rbegin(); it != c.metadata.rend(); ++it)
    if (it->rfind("lowered: ", 0) == 0) return it->substr(9);
  if (!c.gates.empty() &&
      std::all_of(c.gates.begin(), c.gates.end(),
                  [](const Gate& g) { return g.level == Level::kCincLowered; })) {
    return "cinc";
  }
  return "controlled";
}

void fill_verdict(VerificationResult& r, const Circuit& c, bool up_to_phase) {
  r.error = up_to_phase ? std::min(r.raw_error, r.phase_adjusted_error) : r.raw_error;
  r.pass_1e10 = r.error < 1e-10;
  r.pass_1e8 = r.error < 1e-8;
  r.pass_1e7 = r.error < 1e-7;
  r.declared_level = declared_level(c);
  if (r.declared_level == "controlled") {
    try {
      c.validate();
    } catch (const std::exception& e) {
      r.library_ok = false;
      r.library_violation = e.what();
    }
  } else {
    const MembershipResult m = check_gate_library(c, parse_lowering_target(r.declared_level));
    r.library_ok = m.ok;
    r.library_violation = m.first_violation;
  }
}

}  // namespace

VerificationResult verify_circuit(const Circuit& c, const Matrix& target, bool up_to_phase,
                                  std::uint64_t cap) {
  const Matrix u = circuit_unitary(c, cap);
  if (target.rows() != u.rows() || target.cols() != u.cols()) {
    throw std::invalid_argument("target dimension does not match the circuit");
  }
  VerificationResult r;
  r.raw_error = max_norm_distance(u, target);
  const PhaseDistance pd = distance_up_to_phase(u, target);
  r.phase_adjusted_error = pd.distance;
  r.phase = pd.phase;
  fill_verdict(r, c, up_to_phase);
  return r;
}

VerificationResult verify_isometry(const Circuit& c, const Matrix& target, bool up_to_phase,
                                   std::uint64_t cap) {
  const Matrix u = circuit_unitary(c, cap);
  if (target.rows() != u.rows() || target.cols() > u.cols()) {
    throw std::invalid_argument("target dimension does not match the circuit");
  }
  const Matrix cols = u.block(0, 0, u.rows(), target.cols());
  VerificationResult r;
  r.raw_error = max_norm_distance(cols, target);
  const PhaseDistance pd = distance_up_to_phase(cols, target);
  r.phase_adjusted_error = pd.distance;
  r.phase = pd.phase;
  fill_verdict(r, c, up_to_phase);
  return r;
}

Matrix conjugate_by_circuit(const Circuit& c, const Matrix& rho) {
  Matrix m = rho;
  for (const auto& g : c.gates) apply_gate_rows(g, m, c.d, c.n);
  m = m.adjoint();
  for (const auto& g : c.gates) apply_gate_rows(g, m, c.d, c.n);
  return m.adjoint();
}

namespace {

// Diagonalizing unitary U = sum_j |j><u_j| for a Hermitian h, synthesized
// and simulated on rho.
MeasuredPart measure_hermitian(const Matrix& h, const Matrix& rho, int d, int n, UnitaryAlgo algo) {
  const EigenSystem es = normal_eigendecomposition(h, EigenMode::kHermitian);
  const Matrix u = es.eigenvectors.adjoint();
  const Circuit c = algo == UnitaryAlgo::kTriangle ? triangle(u, d, n) : spectral_synthesize(u, d, n);
  const Matrix out = conjugate_by_circuit(c, rho);
  MeasuredPart part;
  for (std::size_t j = 0; j < h.rows(); ++j) {
    part.eigenvalues.push_back(es.eigenvalues[j].real());
    part.populations.push_back(out(j, j).real());
    part.value += part.eigenvalues.back() * part.populations.back();
  }
  return part;
}

}  // namespace

ExpectationResult expectation_value(const Matrix& a, const DensityMatrix& rho, int d, int n,
                                    UnitaryAlgo algo) {
  if (!a.is_square()) throw std::invalid_argument("observable must be square");
  const std::uint64_t dim = checked_pow(d, n);
  if (a.rows() != dim || rho.dim() != dim) throw std::invalid_argument("observable dimension != d^n");
  a.check_finite();
  ExpectationResult r;
  const Matrix& p = rho.matrix();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) r.direct += a(i, k) * p(k, i);

  if (hermiticity_error(a) < 1e-10) {
    Matrix h = a;
    for (std::size_t i = 0; i < dim; ++i) {
      h(i, i) = h(i, i).real();
      for (std::size_t k = i + 1; k < dim; ++k) h(k, i) = std::conj(h(i, k));
    }
    r.hermitian = measure_hermitian(h, p, d, n, algo);
    r.value = r.hermitian.value;
    return r;
  }
  const Matrix ad = a.adjoint();
  Matrix ah = a + ad;
  ah *= 0.5;
  Matrix hh = a - ad;
  hh *= cplx(0.0, -0.5);  // A_a = i hh
  r.hermitian = measure_hermitian(ah, p, d, n, algo);
  r.anti_hermitian = measure_hermitian(hh, p, d, n, algo);
  r.value = cplx(r.hermitian.value, r.anti_hermitian->value);
  return r;
}

SubspaceResult subspace_expectation(const Matrix& a, const DensityMatrix& rho, std::size_t k,
                                    int d, int n) {
  const std::uint64_t dim = checked_pow(d, n);
  if (!a.is_square() || a.rows() != dim || rho.dim() != dim) {
    throw std::invalid_argument("observable dimension != d^n");
  }
  if (k > dim) throw std::invalid_argument("subspace size exceeds d^n");
  const EigenMode mode = hermiticity_error(a) < 1e-10 ? EigenMode::kHermitian : EigenMode::kNormal;
  const EigenSystem es = normal_eigendecomposition(a, mode);
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const double ax = std::abs(es.eigenvalues[x]);
    const double ay = std::abs(es.eigenvalues[y]);
    if (std::abs(ax - ay) > 1e-12) return ax > ay;
    return std::arg(es.eigenvalues[x]) < std::arg(es.eigenvalues[y]);
  });
  SubspaceResult r;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t idx = order[j];
    const StateVector uj(es.eigenvectors.column(idx));
    const std::vector<int> target = to_digits(j, d, n);
    const Circuit w = club_householder(uj, target, d, n).circuit;
    const Matrix out = conjugate_by_circuit(w, rho.matrix());
    r.eigenvalues.push_back(es.eigenvalues[idx]);
    r.populations.push_back(out(j, j).real());
    r.value += es.eigenvalues[idx] * r.populations.back();
  }
  return r;
}

}  // namespace qudsynth
