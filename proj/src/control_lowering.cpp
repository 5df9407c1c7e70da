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


#include "qudsynth/control_lowering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qudsynth {

namespace {

constexpr double kMergeTol = 1e-14;

// Appends a local gate, folding it into an immediately preceding local on the
// same qudit.
void push_local(Circuit& out, int qudit, const Matrix& v) {
  if (is_identity(v, kMergeTol)) return;
  if (!out.gates.empty()) {
    Gate& last = out.gates.back();
    if (last.num_controls() == 0 && last.is(PrimitiveKind::kLocal) &&
        last.word.target() == static_cast<std::size_t>(qudit)) {
      last.v = v * last.v;
      if (is_identity(last.v, kMergeTol)) out.gates.pop_back();
      return;
    }
  }
  out.push(make_local(out.n, qudit, v));
}

Matrix phase_diag(int d, cplx xi, bool powers) {
  Matrix m = Matrix::identity(d);
  if (powers) {
    cplx acc = 1.0;
    for (int j = 0; j < d; ++j) {
      m(j, j) = acc;
      acc *= xi;
    }
  } else {
    m(d - 1, d - 1) = xi;
  }
  return m;
}

// P|j> = |0>, P|j+1> = |1>, remaining states in ascending order.
Matrix flip_frame(int d, int j) {
  std::vector<int> order = {j, j + 1};
  for (int i = 0; i < d; ++i)
    if (i != j && i != j + 1) order.push_back(i);
  Matrix p(d, d);
  for (int pos = 0; pos < d; ++pos) p(pos, order[pos]) = 1.0;
  return p;
}

void push_flip_inc(Circuit& out, int d, int c, int t, bool inverse) {
  // INC = (01)(12)...(d-2,d-1): the rightmost transposition acts first.
  for (int step = 0; step < d - 1; ++step) {
    const int j = inverse ? step : d - 2 - step;
    const Matrix p = flip_frame(d, j);
    push_local(out, t, p);
    out.push(make_controlled(out.n, c, d - 1, t, flip_matrix(d, 0, 1), Level::kTwoQudit,
                             Primitive{PrimitiveKind::kFlip, 0, 1}));
    push_local(out, t, p.adjoint());
  }
}

void push_inc(Circuit& out, int d, int c, int t, bool inverse, bool flip_form) {
  if (flip_form) {
    push_flip_inc(out, d, c, t, inverse);
  } else {
    out.push(make_cinc(d, out.n, c, t, inverse));
  }
}

// Control c fires on |d-1>. Per eigenpair (theta_k, psi_k):
// W_k^dag, D^-1, CINC^-1, D, CINC, diag(1,..,1,xi) on c, W_k.
void push_singly_body(Circuit& out, int d, int c, int t, const Matrix& v, bool flip_form) {
  if (!is_unitary(v, 1e-10)) throw std::invalid_argument("controlled matrix is not unitary");
  const EigenSystem es = normal_eigendecomposition(v, EigenMode::kUnitary);
  for (int k = 0; k < d; ++k) {
    const auto psi = es.eigenvectors.column(k);
    const Matrix h = householder_to_e0(psi);  // h psi_k ~ |0>, so W_k = h^dag
    const cplx xi = std::polar(1.0, std::arg(es.eigenvalues[k]) / d);
    const Matrix dm = phase_diag(d, xi, true);
    push_local(out, t, dm.adjoint() * h);
    push_inc(out, d, c, t, true, flip_form);
    push_local(out, t, dm);
    push_inc(out, d, c, t, false, flip_form);
    push_local(out, c, phase_diag(d, xi, false));
    push_local(out, t, h.adjoint());
  }
}

Circuit lower_one(const Gate& g, int d, int n, bool flip_form) {
  Circuit out(d, n);
  const int k = g.num_controls();
  const int t = static_cast<int>(g.word.target());
  if (k == 0) {
    push_local(out, t, g.v);
    return out;
  }
  if (k > 1) throw std::invalid_argument("expected at most one control");
  const int c = static_cast<int>(g.word.control_positions().front());
  const int shift = d - 1 - g.word[c];
  push_local(out, c, inc_matrix(d, shift));
  if (g.is(PrimitiveKind::kCinc) || g.is(PrimitiveKind::kCincInv)) {
    push_inc(out, d, c, t, g.is(PrimitiveKind::kCincInv), flip_form);
  } else {
    push_singly_body(out, d, c, t, g.v, flip_form);
  }
  push_local(out, c, inc_matrix(d, -shift));
  return out;
}

// All controls fire on |d-1>.
class MultiLowerer {
 public:
  MultiLowerer(int d, int n, const LoweringOptions& opts) : d_(d), n_(n), opts_(opts) {}

  // k-controlled INC; `spare` is a free line usable as workspace (-1 if none).
  Circuit inc_gate(const std::vector<int>& ctrl, int t, int spare) {
    Circuit out(d_, n_);
    const std::size_t k = ctrl.size();
    if (k == 0) {
      push_local(out, t, inc_matrix(d_, 1));
    } else if (k == 1) {
      out.push(make_cinc(d_, n_, ctrl[0], t));
    } else if (k == 2 || spare < 0) {
      decompose(out, ctrl, t, inc_matrix(d_, 1), true, nullptr);
    } else {
      // A: first half onto the spare; B: second half plus spare onto t.
      const std::size_t k1 = (k + 1) / 2;
      const std::vector<int> first(ctrl.begin(), ctrl.begin() + k1);
      std::vector<int> second(ctrl.begin() + k1, ctrl.end());
      second.push_back(spare);
      const Circuit a = inc_gate(first, spare, t);
      const Circuit b = inc_gate(second, t, ctrl[0]);
      for (int i = 0; i < d_; ++i) {
        out.append(a);
        out.append(b);
      }
    }
    return out;
  }

  void v_gate(Circuit& out, const std::vector<int>& ctrl, int t, const Matrix& v,
              RootChain* chain) {
    if (opts_.epsilon > 0.0 && max_norm_distance(v, Matrix::identity(d_)) < opts_.epsilon) {
      return;
    }
    if (ctrl.empty()) {
      push_local(out, t, v);
    } else if (ctrl.size() == 1) {
      one(out, ctrl[0], t, v);
    } else {
      decompose(out, ctrl, t, v, false, chain);
    }
  }

 private:
  void one(Circuit& out, int c, int t, const Matrix& v) {
    out.push(make_controlled(n_, c, d_ - 1, t, v, Level::kTwoQudit));
  }

  const Matrix& inc_root() {
    if (inc_root_.empty()) inc_root_ = unitary_root(inc_matrix(d_, 1), d_);
    return inc_root_;
  }

  // X^{d-1} [y->t], INC [R->y], (X^dag [y->t], INC [R->y]) x (d-1), X [R->t].
  void decompose(Circuit& out, const std::vector<int>& ctrl, int t, const Matrix& v, bool is_inc,
                 RootChain* chain) {
    const Matrix x = is_inc ? inc_root() : unitary_root(v, d_);
    if (chain) chain->push_back(max_norm_distance(x, Matrix::identity(d_)));
    const int y = ctrl.back();
    const std::vector<int> rest(ctrl.begin(), ctrl.end() - 1);
    const Circuit inc_piece = inc_gate(rest, y, t);
    one(out, y, t, matrix_power(x, d_ - 1));
    out.append(inc_piece);
    const Matrix xd = x.adjoint();
    for (int i = 1; i < d_; ++i) {
      one(out, y, t, xd);
      out.append(inc_piece);
    }
    v_gate(out, rest, t, x, chain);
  }

  int d_;
  int n_;
  LoweringOptions opts_;
  Matrix inc_root_;
};

}  // namespace

Circuit lower_singly_controlled(const Gate& g, int d, int n) { return lower_one(g, d, n, false); }

Circuit lower_controlled_flip_form(const Gate& g, int d, int n) {
  return lower_one(g, d, n, true);
}

Circuit lower_multi_controlled(const Gate& g, int d, int n, const LoweringOptions& opts,
                               RootChain* chain) {
  g.validate(d, n);
  Circuit out(d, n);
  const int k = g.num_controls();
  if (k <= 1) {
    Gate copy = g;
    if (k == 0 && !copy.primitive) copy.primitive = Primitive{PrimitiveKind::kLocal};
    copy.level = Level::kTwoQudit;
    out.push(std::move(copy));
    return out;
  }
  const int t = static_cast<int>(g.word.target());
  std::vector<int> ctrl;
  for (std::size_t p : g.word.control_positions()) ctrl.push_back(static_cast<int>(p));
  for (int c : ctrl) push_local(out, c, inc_matrix(d, d - 1 - g.word[c]));
  MultiLowerer lw(d, n, opts);
  if (g.is(PrimitiveKind::kCinc)) {
    out.append(lw.inc_gate(ctrl, t, -1));
  } else {
    lw.v_gate(out, ctrl, t, g.v, chain);
  }
  for (int c : ctrl) push_local(out, c, inc_matrix(d, -(d - 1 - g.word[c])));
  return out;
}

Circuit lower_k_controlled_inc(int k, int d, int n_ambient) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (n_ambient < k + 2) throw std::invalid_argument("insufficient ambient width for k-controlled INC");
  std::vector<int> ctrl(k);
  for (int i = 0; i < k; ++i) ctrl[i] = i;
  MultiLowerer lw(d, n_ambient, {});
  return lw.inc_gate(ctrl, k + 1, k);
}

LoweringTarget parse_lowering_target(const std::string& text) {
  if (text == "two-qudit") return LoweringTarget::kTwoQudit;
  if (text == "cinc") return LoweringTarget::kCinc;
  if (text == "cinc-only") return LoweringTarget::kCincOnly;
  if (text == "flip") return LoweringTarget::kFlip;
  throw std::invalid_argument("unknown lowering level '" + text + "'");
}

std::string lowering_target_name(LoweringTarget t) {
  switch (t) {
    case LoweringTarget::kTwoQudit: return "two-qudit";
    case LoweringTarget::kCinc: return "cinc";
    case LoweringTarget::kCincOnly: return "cinc-only";
    case LoweringTarget::kFlip: return "flip";
  }
  return "cinc";
}

Circuit cinc_only_rewrite(const Circuit& c) {
  Circuit out(c.d, c.n);
  out.metadata = c.metadata;
  for (const auto& g : c.gates) {
    if (g.is(PrimitiveKind::kCincInv)) {
      const int ctl = static_cast<int>(g.word.control_positions().front());
      const int shift = c.d - 1 - g.word[ctl];
      push_local(out, ctl, inc_matrix(c.d, shift));
      for (int i = 0; i < c.d - 1; ++i)
        out.push(make_cinc(c.d, c.n, ctl, static_cast<int>(g.word.target())));
      push_local(out, ctl, inc_matrix(c.d, -shift));
    } else {
      out.push(g);
    }
  }
  return out;
}

Circuit lower_circuit(const Circuit& c, LoweringTarget target, const LoweringOptions& opts) {
  Circuit out(c.d, c.n);
  out.metadata = c.metadata;
  out.metadata.push_back("lowered: " + lowering_target_name(target));
  for (const auto& g : c.gates) {
    if (g.elidable) continue;
    const Circuit piece = lower_multi_controlled(g, c.d, c.n, opts);
    if (target == LoweringTarget::kTwoQudit) {
      out.append(piece);
      continue;
    }
    const bool flip = target == LoweringTarget::kFlip;
    for (const auto& h : piece.gates) {
      if (h.num_controls() == 0) {
        push_local(out, static_cast<int>(h.word.target()), h.v);
      } else {
        for (const auto& x : lower_one(h, c.d, c.n, flip).gates) {
          if (x.num_controls() == 0) {
            push_local(out, static_cast<int>(x.word.target()), x.v);
          } else {
            out.push(x);
          }
        }
      }
    }
  }
  if (target == LoweringTarget::kCincOnly) return cinc_only_rewrite(out);
  return out;
}

MembershipResult check_gate_library(const Circuit& c, LoweringTarget target) {
  MembershipResult res;
  auto fail = [&](std::size_t i, const std::string& why) {
    res.ok = false;
    res.first_violation = "gate " + std::to_string(i) + ": " + why;
  };
  for (std::size_t i = 0; i < c.gates.size() && res.ok; ++i) {
    const Gate& g = c.gates[i];
    const int k = g.num_controls();
    if (k > 1) {
      fail(i, "more than one control");
      break;
    }
    if (target == LoweringTarget::kTwoQudit) continue;
    if (k == 0) {
      if (!g.is(PrimitiveKind::kLocal)) fail(i, "uncontrolled gate is not LOCAL");
      continue;
    }
    const int cv = g.word[g.word.control_positions().front()];
    if (cv != c.d - 1) {
      fail(i, "control does not fire on d-1");
      continue;
    }
    switch (target) {
      case LoweringTarget::kCinc:
      case LoweringTarget::kCincOnly: {
        const bool inv = g.is(PrimitiveKind::kCincInv);
        if (!g.is(PrimitiveKind::kCinc) && !inv) {
          fail(i, "controlled gate is not CINC");
        } else if (inv && target == LoweringTarget::kCincOnly) {
          fail(i, "CINC^-1 in cinc-only circuit");
        } else if (max_norm_distance(g.v, inc_matrix(c.d, inv ? -1 : 1)) > 0.0) {
          fail(i, "CINC tag with a different matrix");
        }
        break;
      }
      case LoweringTarget::kFlip:
        if (!g.is(PrimitiveKind::kFlip) || max_norm_distance(g.v, flip_matrix(c.d, 0, 1)) > 0.0) {
          fail(i, "controlled gate is not FLIP(0,1)");
        }
        break;
      default: break;
    }
  }
  return res;
}

bool touches_only(const Circuit& c, const std::vector<int>& allowed) {
  auto ok = [&](std::size_t p) {
    return std::find(allowed.begin(), allowed.end(), static_cast<int>(p)) != allowed.end();
  };
  for (const auto& g : c.gates) {
    if (!ok(g.word.target())) return false;
    for (std::size_t p : g.word.control_positions())
      if (!ok(p)) return false;
  }
  return true;
}

}  // namespace qudsynth
