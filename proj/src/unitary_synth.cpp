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


#include "qudsynth/unitary_synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qudsynth/control_lowering.hpp"
#include "qudsynth/random.hpp"
#include "qudsynth/state_synth.hpp"

namespace qudsynth {

namespace {

constexpr double kSubcolumnTol = 1e-14;
constexpr double kElideTol = 1e-14;

class TriangleReducer {
 public:
  TriangleReducer(int d, int n, Matrix& work, std::uint64_t limit, Circuit& out)
      : d_(d), n_(n), work_(work), limit_(limit), out_(out) {}

  void reduce(std::vector<int> prefix, std::uint64_t offset) {
    if (offset >= limit_) return;
    const int np = n_ - static_cast<int>(prefix.size());
    if (np == 1) {
      base_case(prefix, offset);
      return;
    }
    const std::uint64_t sub = checked_pow(d_, np - 1);
    prefix.push_back(ControlWord::kAny);
    reduce(prefix, offset);
    for (int m = 0; m < d_; ++m) {
      for (std::uint64_t c = 0; c < sub; ++c) {
        const std::uint64_t j = offset + m * sub + c;
        if (j >= limit_) return;
        if (m == d_ - 1) continue;
        const std::vector<int> cdigits = to_digits(c, d_, np - 1);
        for (int ell = m + 1; ell < d_; ++ell) collapse_subcolumn(prefix, offset, sub, ell, j, cdigits);
        final_clear(prefix, offset, sub, m, c, j, cdigits);
      }
      if (m + 1 < d_) {
        prefix.back() = m + 1;
        reduce(prefix, offset + (m + 1) * sub);
      }
    }
  }

 private:
  void emit(Gate g) {
    apply_gate_rows(g, work_, d_, n_);
    out_.push(std::move(g));
  }

  static std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  void base_case(const std::vector<int>& prefix, std::uint64_t offset) {
    const std::uint64_t ncols = std::min<std::uint64_t>(d_, limit_ - offset);
    Matrix block(d_, d_);
    for (int r = 0; r < d_; ++r)
      for (std::uint64_t c = 0; c < ncols; ++c) block(r, c) = work_(offset + r, offset + c);
    Matrix q = householder_triangularizer(block, ncols);
    if (is_identity(q, kElideTol)) return;
    emit(make_gate(ControlWord(concat(prefix, {ControlWord::kTarget})), std::move(q)));
  }

  void collapse_subcolumn(const std::vector<int>& prefix, std::uint64_t offset, std::uint64_t sub,
                          int ell, std::uint64_t j, const std::vector<int>& cdigits) {
    StateVector column(sub);
    for (std::uint64_t r = 0; r < sub; ++r) column[r] = work_(offset + ell * sub + r, j);
    if (column.norm() <= kSubcolumnTol) return;
    const int np1 = static_cast<int>(cdigits.size());
    const StateSynthResult res = club_householder(column, cdigits, d_, np1);
    std::vector<int> head = prefix;
    head.back() = ell;
    for (const Gate& g : res.circuit.gates) {
      if (g.elidable) continue;
      emit(make_gate(ControlWord(concat(head, g.word.letters())), g.v));
    }
  }

  // V is the identity on components 0..m-1 and collapses m..d-1 onto m.
  void final_clear(const std::vector<int>& prefix, std::uint64_t offset, std::uint64_t sub, int m,
                   std::uint64_t c, std::uint64_t j, const std::vector<int>& cdigits) {
    std::vector<cplx> tail(d_ - m);
    for (int k = m; k < d_; ++k) tail[k - m] = work_(offset + k * sub + c, j);
    if (norm(tail) == 0.0) return;
    const Matrix h = householder_to_e0(tail);
    if (is_identity(h, kElideTol)) return;
    Matrix v = Matrix::identity(d_);
    for (int r = m; r < d_; ++r)
      for (int s = m; s < d_; ++s) v(r, s) = h(r - m, s - m);
    std::vector<int> head = prefix;
    head.back() = ControlWord::kTarget;
    emit(make_gate(ControlWord(concat(head, cdigits)), std::move(v)));
  }

  int d_;
  int n_;
  Matrix& work_;
  std::uint64_t limit_;
  Circuit& out_;
};

struct Reduction {
  Circuit gates;
  std::vector<double> phases;
  double offdiag = 0.0;
};

Reduction run_reduction(const Matrix& m, int d, int n, std::uint64_t limit, double drift_tol) {
  Reduction r;
  r.gates = Circuit(d, n);
  Matrix work = m;
  TriangleReducer red(d, n, work, limit, r.gates);
  red.reduce({}, 0);
  r.phases.assign(work.rows(), 0.0);
  for (std::uint64_t j = 0; j < limit; ++j) {
    const cplx x = work(j, j);
    if (std::abs(std::abs(x) - 1.0) > drift_tol) {
      throw std::runtime_error("reduced diagonal entry drifted off the unit circle");
    }
    r.phases[j] = std::arg(x);
    for (std::uint64_t i = 0; i < work.rows(); ++i)
      if (i != j) r.offdiag = std::max(r.offdiag, std::abs(work(i, j)));
  }
  return r;
}

}  // namespace

Circuit emulate_diagonal(const std::vector<double>& phases, int d, int n) {
  const std::uint64_t dim = checked_pow(d, n);
  if (phases.size() != dim) throw std::invalid_argument("need d^n phases");
  Circuit out(d, n);
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (std::abs(phases[j]) < 1e-12) continue;
    std::vector<int> letters = to_digits(j, d, n);
    const int last = letters.back();
    letters.back() = ControlWord::kTarget;
    Matrix v = Matrix::identity(d);
    v(last, last) = std::polar(1.0, phases[j]);
    out.push(make_gate(ControlWord(std::move(letters)), std::move(v), Level::kControlled,
                       Primitive{PrimitiveKind::kPhase}));
  }
  return out;
}

TriangleResult triangle_detailed(const Matrix& u, int d, int n, const TriangleOptions& opts) {
  const std::uint64_t dim = checked_pow(d, n, opts.cap);
  if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("matrix size != d^n");
  u.check_finite();
  if (!is_unitary(u, 1e-9)) throw std::invalid_argument("non-unitary input");
  Reduction r = run_reduction(u, d, n, dim, opts.drift_tol);
  TriangleResult out;
  out.reduction = std::move(r.gates);
  out.offdiag_residual = r.offdiag;
  out.phases = r.phases;
  std::vector<double> emulated = r.phases;
  if (opts.factor_global_phase) {
    out.global_phase = r.phases[0];
    for (auto& p : emulated) p = std::remainder(p - out.global_phase, 2.0 * 3.14159265358979323846);
  }
  out.circuit = emulate_diagonal(emulated, d, n);
  out.circuit.append(out.reduction.adjoint());
  if (opts.factor_global_phase && opts.fix_phase && std::abs(out.global_phase) > 0.0) {
    Matrix ph = Matrix::identity(d);
    ph *= std::polar(1.0, out.global_phase);
    out.circuit.push(make_local(n, 0, std::move(ph)));
    out.circuit.gates.back().level = Level::kControlled;
    out.global_phase = 0.0;
  }
  out.circuit.metadata.push_back("algorithm: triangle");
  return out;
}

Circuit triangle(const Matrix& u, int d, int n, const TriangleOptions& opts) {
  return triangle_detailed(u, d, n, opts).circuit;
}

Circuit spectral_synthesize(const Matrix& u, int d, int n, const SpectralOptions& opts) {
  const std::uint64_t dim = checked_pow(d, n, opts.cap);
  if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("matrix size != d^n");
  const EigenSystem es = normal_eigendecomposition(u, EigenMode::kUnitary);
  Circuit out(d, n);
  const std::vector<int> zero(n, 0);
  for (std::uint64_t j = 0; j < dim; ++j) {
    const double phi = std::arg(es.eigenvalues[j]);
    if (std::abs(phi) < opts.skip_tol) continue;
    const StateVector uj(es.eigenvectors.column(j));
    const Circuit w = club_householder(uj, zero, d, n).circuit.without_elidable();
    out.append(w);
    std::vector<int> letters(n, 0);
    letters.back() = ControlWord::kTarget;
    Matrix v = Matrix::identity(d);
    v(0, 0) = std::polar(1.0, phi);
    out.push(make_gate(ControlWord(std::move(letters)), std::move(v), Level::kControlled,
                       Primitive{PrimitiveKind::kPhase}));
    out.append(w.adjoint());
  }
  out.metadata.push_back("algorithm: spectral");
  return out;
}

Circuit synthesize_isometry(const Matrix& columns, int d, int n, const TriangleOptions& opts) {
  const std::uint64_t dim = checked_pow(d, n, opts.cap);
  if (columns.rows() != dim || columns.cols() == 0 || columns.cols() > dim) {
    throw std::invalid_argument("isometry must be d^n x l with 1 <= l <= d^n");
  }
  columns.check_finite();
  if (max_norm_distance(columns.adjoint() * columns, Matrix::identity(columns.cols())) >= 1e-9) {
    throw std::invalid_argument("non-isometric input");
  }
  Reduction r = run_reduction(columns, d, n, columns.cols(), opts.drift_tol);
  Circuit out = emulate_diagonal(r.phases, d, n);
  out.append(r.gates.adjoint());
  out.metadata.push_back("algorithm: isometry");
  return out;
}

UnitaryAlgo parse_unitary_algo(const std::string& text) {
  if (text == "triangle") return UnitaryAlgo::kTriangle;
  if (text == "spectral") return UnitaryAlgo::kSpectral;
  throw std::invalid_argument("unknown algorithm '" + text + "'");
}

// ---------------------------------------------------------------------------
// Published table

namespace {

struct PublishedRow {
  int n;
  std::vector<std::uint64_t> row1;  // d = 2, 3, ...
  std::vector<std::uint64_t> row2;
};

const std::vector<PublishedRow>& published_rows() {
  static const std::vector<PublishedRow> rows = {
      {2,
       {18, 78, 220, 495, 996, 1708, 2808, 4365, 6490},
       {18, 78, 220, 495, 996, 1708, 2808, 4365, 6490}},
      {3,
       {192, 2025, 10752, 39375, 114048, 280917, 614400, 1226907, 2280000},
       {154, 1944, 10496, 38750, 112752, 278516, 610304, 1220346, 2270000}},
      {4,
       {1152, 23085, 200704, 1096875, 4447872, 14638897, 41287680, 103394799, 235600000},
       {1056, 22113, 195584, 1078125, 4393440, 14504441, 40992768, 102804309, 234500000}},
      {5,
       {5504, 223074, 3317760, 27875000, 161523072, 720717774, 2649227264, 8386138980,
        23574000000},
       {4928, 211410, 3215360, 27312500, 159236928, 713188238, 2627993600, 8332994880,
        23453000000}},
      {6, {23296, 1931121, 50003968}, {21120, 1856763, 49070080}},
      {7, {92672, 16605891}, {84224, 16087572}},
      {8, {353280, 141599502}, {324096, 138627369}},
      {9, {1333248, 1224144819}, {1246208, 1209914010}},
      {10, {5025792, 10741839786}, {4786176, 10680015483}},
      {11, {19128320, 95432986134}, {18452480, 95147070876}},
      {12, {73515008}, {71639040}},
  };
  return rows;
}

std::uint64_t cell_seed(std::uint64_t seed, int d, int n) {
  return seed * 1000003u + static_cast<std::uint64_t>(d) * 1009u + static_cast<std::uint64_t>(n);
}

}  // namespace

std::optional<PublishedCell> published_counts(int d, int n) {
  for (const auto& row : published_rows()) {
    if (row.n != n) continue;
    const int idx = d - 2;
    if (idx < 0 || idx >= static_cast<int>(row.row1.size())) return std::nullopt;
    PublishedCell cell;
    cell.counts = {row.row1[idx], row.row2[idx]};
    cell.triangle_row1 = n == 2;
    cell.triangle_row2 = n == 2 || (n == 3 && d == 2);
    return cell;
  }
  return std::nullopt;
}

CostPair measured_lowered_counts(const Circuit& c) {
  const GateCounts gc = gate_counts(lower_circuit(c, LoweringTarget::kCinc));
  return {gc.cinc, gc.cinc_inv};
}

std::vector<CountTableCell> table2_report(int d_lo, int d_hi, int n_lo, int n_hi,
                                      const CountTableOptions& opts) {
  std::vector<CountTableCell> cells;
  for (int d = d_lo; d <= d_hi; ++d) {
    for (int n = n_lo; n <= n_hi; ++n) {
      CountTableCell tri;
      tri.d = d;
      tri.n = n;
      CountTableCell spe = tri;
      CountTableCell best = tri;
      tri.algo = "triangle";
      spe.algo = "spectral";
      best.algo = "best";
      tri.counts = triangle_counts(d, n);
      spe.counts = spectral_counts(d, n);
      std::uint64_t dim = 0;
      try {
        dim = checked_pow(d, n, opts.measure_cap);
      } catch (const std::overflow_error&) {
        dim = 0;
      }
      if (dim != 0) {
        Rng rng(cell_seed(opts.seed, d, n));
        const Matrix u = random_unitary(dim, rng);
        const CostPair t = measured_lowered_counts(triangle(u, d, n));
        const CostPair s = measured_lowered_counts(spectral_synthesize(u, d, n));
        tri.formula_agrees = t == tri.counts;
        spe.formula_agrees = s == spe.counts;
        tri.counts = t;
        spe.counts = s;
        tri.measured = spe.measured = true;
      }
      for (CountTableCell* c : {&tri, &spe}) {
        c->note = c->measured ? (c->formula_agrees ? "measured" : "measured;differs from count model")
                              : "count model";
      }
      best.counts = {std::min(tri.counts.cinc, spe.counts.cinc),
                     std::min(tri.counts.cinc_inv, spe.counts.cinc_inv)};
      best.measured = tri.measured;
      best.formula_agrees = tri.formula_agrees && spe.formula_agrees;
      const bool t1 = tri.counts.cinc <= spe.counts.cinc;
      const bool t2 = tri.counts.cinc_inv <= spe.counts.cinc_inv;
      std::ostringstream note;
      note << "ours " << (t1 ? "T" : "S") << "/" << (t2 ? "T" : "S");
      if (auto pub = published_counts(d, n)) {
        best.published_cinc = pub->counts.cinc;
        best.published_cinc_inv = pub->counts.cinc_inv;
        CountTableCell& w1 = pub->triangle_row1 ? tri : spe;
        CountTableCell& w2 = pub->triangle_row2 ? tri : spe;
        w1.published_cinc = pub->counts.cinc;
        w2.published_cinc_inv = pub->counts.cinc_inv;
        note << ";published " << (pub->triangle_row1 ? "T" : "S") << "/"
             << (pub->triangle_row2 ? "T" : "S");
        if (t1 != pub->triangle_row1 || t2 != pub->triangle_row2) note << ";winner differs";
      } else {
        note << ";no published value";
      }
      best.note = note.str();
      for (CountTableCell* c : {&tri, &spe, &best}) {
        c->match = c->has_published() && (!c->published_cinc || *c->published_cinc == c->counts.cinc) &&
                   (!c->published_cinc_inv || *c->published_cinc_inv == c->counts.cinc_inv);
        cells.push_back(*c);
      }
    }
  }
  return cells;
}

std::string table2_csv(const std::vector<CountTableCell>& cells) {
  std::ostringstream out;
  out << "d,n,algo,cinc,cinc_inv,paper_cinc,paper_cinc_inv,match,source\n";
  for (const auto& c : cells) {
    out << c.d << ',' << c.n << ',' << c.algo << ',' << c.counts.cinc << ',' << c.counts.cinc_inv
        << ',';
    if (c.published_cinc) out << *c.published_cinc;
    out << ',';
    if (c.published_cinc_inv) out << *c.published_cinc_inv;
    out << ',' << (c.has_published() ? (c.match ? "1" : "0") : "") << ',' << c.note << '\n';
  }
  return out.str();
}

}  // namespace qudsynth
