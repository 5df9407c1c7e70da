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


// qudsynth command-line driver. Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qudsynth/club_sequence.hpp"
#include "qudsynth/control_lowering.hpp"
#include "qudsynth/count_model.hpp"
#include "qudsynth/io.hpp"
#include "qudsynth/random.hpp"
#include "qudsynth/state_synth.hpp"
#include "qudsynth/unitary_synth.hpp"
#include "qudsynth/verify.hpp"

using namespace qudsynth;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::uint64_t cap = kDefaultDimCap;
};

// n with d^n == dim, or throw.
int infer_n(std::size_t dim, int d) {
  if (d < 2) throw std::invalid_argument("--d must be >= 2");
  int n = 0;
  std::uint64_t p = 1;
  while (p < dim) {
    p *= static_cast<std::uint64_t>(d);
    ++n;
  }
  if (p != dim || n < 1) throw std::invalid_argument("dimension is not a power of d");
  return n;
}

// "2..5" or "3"
std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + s + "'");
  }
}

std::vector<int> parse_target(const std::string& s, int d, int n) {
  std::vector<int> m;
  if (s.find(' ') != std::string::npos || s.find(',') != std::string::npos) {
    std::string t = s;
    for (auto& ch : t)
      if (ch == ',') ch = ' ';
    std::istringstream in(t);
    int v;
    while (in >> v) m.push_back(v);
  } else {
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad --target '" + s + "'");
      m.push_back(ch - '0');
    }
  }
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("--target needs n dits");
  for (int v : m)
    if (v < 0 || v >= d) throw std::invalid_argument("--target dit out of range");
  return m;
}

void emit(const std::string& path, const json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(1) << '\n';
  } else {
    write_json_file(path, j);
  }
}

json counts_json(const Circuit& c) {
  const GateCounts gc = gate_counts(c);
  json j;
  j["total"] = gc.total;
  j["cinc"] = gc.cinc;
  j["cinc_inv"] = gc.cinc_inv;
  j["local"] = gc.local;
  j["flip"] = gc.flip;
  json arity = json::object();
  for (const auto& [k, v] : gc.per_arity) arity[std::to_string(k)] = v;
  j["per_arity"] = arity;
  return j;
}

json verification_json(const VerificationResult& r) {
  return json{{"error", r.error},
              {"raw_error", r.raw_error},
              {"phase_adjusted_error", r.phase_adjusted_error},
              {"phase", r.phase},
              {"pass_1e-10", r.pass_1e10},
              {"pass_1e-8", r.pass_1e8},
              {"pass_1e-7", r.pass_1e7},
              {"declared_level", r.declared_level},
              {"library_ok", r.library_ok},
              {"library_violation", r.library_violation}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qudsynth: circuit synthesis for qudit registers"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "RNG seed");
  app.add_option("--tol", common.tol, "verification tolerance");
  app.add_option("--cap", common.cap, "max dense dimension");
  app.set_version_flag("--version", std::string("qudsynth ") + kToolVersion + " (format " +
                                        kFormatVersion + ")");

  // club-seq
  auto* club = app.add_subcommand("club-seq", "print the club sequence for (d, n)");
  int cs_d = 2, cs_n = 2;
  bool cs_pretty = false, cs_count = false;
  club->add_option("--d", cs_d)->required();
  club->add_option("--n", cs_n)->required();
  club->add_flag("--pretty", cs_pretty, "use the club glyph");
  club->add_flag("--count", cs_count, "print only the length");

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize a state, unitary or isometry");
  synth->require_subcommand(1);
  synth->fallthrough();
  auto* s_state = synth->add_subcommand("state", "collapse psi onto |m>");
  auto* s_unit = synth->add_subcommand("unitary", "synthesize a unitary");
  auto* s_iso = synth->add_subcommand("isometry", "synthesize an isometry (first columns)");
  std::string in_path, out_path, target_text, algo_text = "triangle";
  int sd = 0;
  bool fix_phase = false;
  for (auto* sc : {s_state, s_unit, s_iso}) {
    sc->add_option("--in", in_path)->required();
    sc->add_option("--out", out_path);
    sc->add_option("--d", sd, "qudit dimension")->required();
    sc->add_flag("--fix-phase", fix_phase);
  }
  s_state->add_option("--target", target_text, "basis label m, e.g. 012 (default 0..0)");
  s_unit->add_option("--algo", algo_text)->check(CLI::IsMember({"triangle", "spectral"}));

  // lower
  auto* lower = app.add_subcommand("lower", "lower a circuit to a smaller gate library");
  std::string level_text = "cinc", report_path;
  double epsilon = 0.0;
  lower->add_option("--level", level_text)
      ->check(CLI::IsMember({"two-qudit", "cinc", "cinc-only", "flip"}));
  lower->add_option("--in", in_path)->required();
  lower->add_option("--out", out_path);
  lower->add_option("--report", report_path);
  lower->add_option("--epsilon", epsilon, "skip gates with ||V - I||_max below this");

  // verify
  auto* verify = app.add_subcommand("verify", "compare a circuit with a target unitary");
  std::string circuit_path, target_path;
  bool up_to_phase = false, isometry = false;
  verify->add_option("--circuit", circuit_path)->required();
  verify->add_option("--target", target_path)->required();
  verify->add_flag("--up-to-phase", up_to_phase);
  verify->add_flag("--isometry", isometry, "compare only the target's columns");
  verify->add_option("--out", out_path);

  // counts
  auto* counts = app.add_subcommand("counts", "gate-count model and table report");
  std::string d_range = "2", n_range = "2";
  bool table = false;
  counts->add_flag("--table", table);
  counts->add_option("--d", d_range, "d or lo..hi");
  counts->add_option("--n", n_range, "n or lo..hi");
  counts->add_option("--out", out_path);

  // expect
  auto* expect = app.add_subcommand("expect", "estimate Tr[A rho] through a synthesized circuit");
  std::string a_path, rho_path;
  std::size_t subspace = 0, shots = 0;
  expect->add_option("--A", a_path)->required();
  expect->add_option("--rho", rho_path)->required();
  expect->add_option("--d", sd)->required();
  expect->add_option("--algo", algo_text)->check(CLI::IsMember({"triangle", "spectral"}));
  expect->add_option("--subspace", subspace, "restrict to the top k eigenvectors");
  expect->add_option("--shots", shots, "add multinomial sampling");
  expect->add_option("--out", out_path);

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "apply a circuit to a state");
  simulate_cmd->add_option("--circuit", circuit_path)->required();
  simulate_cmd->add_option("--in", in_path)->required();
  simulate_cmd->add_option("--out", out_path);

  // random
  auto* random_cmd = app.add_subcommand("random", "generate a random input file");
  std::string kind = "unitary";
  std::size_t dim = 4, cols = 0;
  random_cmd->add_option("--kind", kind)
      ->check(CLI::IsMember({"unitary", "state", "density", "hermitian", "ginibre", "isometry"}));
  random_cmd->add_option("--dim", dim)->required();
  random_cmd->add_option("--cols", cols, "columns for isometry");
  random_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Rng rng(common.seed);
    if (club->parsed()) {
      if (cs_count) {
        std::cout << club_sequence_length(cs_d, cs_n) << '\n';
      } else {
        for_each_club_term(cs_d, cs_n, [&](const ClubTerm& t) {
          std::cout << t.to_string(cs_pretty) << '\n';
        });
      }
      return 0;
    }
    if (s_state->parsed()) {
      const StateVector psi = state_from_json(read_json_file(in_path));
      const int n = infer_n(psi.dim(), sd);
      checked_pow(sd, n, common.cap);
      const std::vector<int> m =
          target_text.empty() ? std::vector<int>(n, 0) : parse_target(target_text, sd, n);
      StateSynthOptions o;
      o.fix_phase = fix_phase;
      const StateSynthResult r = club_householder(psi, m, sd, n, o);
      emit(out_path, circuit_to_json(r.circuit));
      return 0;
    }
    if (s_unit->parsed() || s_iso->parsed()) {
      const Matrix u = matrix_from_json(read_json_file(in_path));
      const int n = infer_n(u.rows(), sd);
      TriangleOptions o;
      o.fix_phase = fix_phase;
      o.cap = common.cap;
      Circuit c(sd, n);
      if (s_iso->parsed()) {
        c = synthesize_isometry(u, sd, n, o);
      } else if (parse_unitary_algo(algo_text) == UnitaryAlgo::kTriangle) {
        c = triangle(u, sd, n, o);
      } else {
        SpectralOptions so;
        so.cap = common.cap;
        c = spectral_synthesize(u, sd, n, so);
      }
      emit(out_path, circuit_to_json(c));
      return 0;
    }
    if (lower->parsed()) {
      const Circuit c = circuit_from_json(read_json_file(in_path));
      LoweringOptions o;
      o.epsilon = epsilon;
      const Circuit out = lower_circuit(c, parse_lowering_target(level_text), o);
      emit(out_path, circuit_to_json(out));
      if (!report_path.empty()) emit(report_path, counts_json(out));
      return 0;
    }
    if (verify->parsed()) {
      const Circuit c = circuit_from_json(read_json_file(circuit_path));
      const Matrix t = matrix_from_json(read_json_file(target_path));
      const VerificationResult r = isometry ? verify_isometry(c, t, up_to_phase, common.cap)
                                            : verify_circuit(c, t, up_to_phase, common.cap);
      json j = verification_json(r);
      j["tol"] = common.tol;
      j["pass"] = r.pass(common.tol);
      emit(out_path, j);
      if (!r.pass(common.tol)) throw VerificationFailure("verification failed");
      return 0;
    }
    if (counts->parsed()) {
      const auto [dlo, dhi] = parse_range(d_range);
      const auto [nlo, nhi] = parse_range(n_range);
      if (table) {
        CountTableOptions o;
        o.seed = common.seed;
        const std::string csv = table2_csv(table2_report(dlo, dhi, nlo, nhi, o));
        if (out_path.empty() || out_path == "-") {
          std::cout << csv;
        } else {
          std::ofstream f(out_path);
          if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
          f << csv;
        }
        return 0;
      }
      json all = json::array();
      for (int d = dlo; d <= dhi; ++d) {
        for (int n = nlo; n <= nhi; ++n) {
          const CountModel m = count_model(d, n);
          json j{{"d", d},
                 {"n", n},
                 {"club_terms", club_count(n, d)},
                 {"triangle", {{"cinc", m.ell_t.cinc}, {"cinc_inv", m.ell_t.cinc_inv}}},
                 {"spectral", {{"cinc", m.ell_s.cinc}, {"cinc_inv", m.ell_s.cinc_inv}}},
                 {"triangle_bound", m.ell_t_bound},
                 {"spectral_bound", m.ell_s_bound},
                 {"f_bound_holds", m.f_bound_holds}};
          json f = json::object();
          for (int k = 0; k < n; ++k) f[std::to_string(k)] = m.f.at({n, k});
          j["f"] = f;
          all.push_back(std::move(j));
        }
      }
      emit(out_path, all.size() == 1 ? all[0] : all);
      return 0;
    }
    if (expect->parsed()) {
      const Matrix a = matrix_from_json(read_json_file(a_path));
      const DensityMatrix rho(matrix_from_json(read_json_file(rho_path)));
      const int n = infer_n(a.rows(), sd);
      json j;
      if (subspace > 0) {
        const SubspaceResult r = subspace_expectation(a, rho, subspace, sd, n);
        j["value"] = {r.value.real(), r.value.imag()};
        j["populations"] = r.populations;
      } else {
        const ExpectationResult r = expectation_value(a, rho, sd, n, parse_unitary_algo(algo_text));
        j["value"] = {r.value.real(), r.value.imag()};
        j["direct"] = {r.direct.real(), r.direct.imag()};
        j["error"] = std::abs(r.value - r.direct);
        j["populations"] = r.hermitian.populations;
        if (shots > 0) {
          // sampled estimate of the Hermitian part only
          std::vector<double> w = r.hermitian.populations;
          for (auto& x : w) x = std::max(0.0, x);
          std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
          double acc = 0.0;
          for (std::size_t s = 0; s < shots; ++s) acc += r.hermitian.eigenvalues[dist(rng)];
          j["sampled_hermitian"] = acc / static_cast<double>(shots);
        }
        emit(out_path, j);
        if (std::abs(r.value - r.direct) >= common.tol) throw VerificationFailure("expectation mismatch");
        return 0;
      }
      emit(out_path, j);
      return 0;
    }
    if (simulate_cmd->parsed()) {
      const Circuit c = circuit_from_json(read_json_file(circuit_path));
      const StateVector psi = state_from_json(read_json_file(in_path));
      if (psi.dim() != checked_pow(c.d, c.n, common.cap)) {
        throw std::invalid_argument("state dimension does not match the circuit");
      }
      emit(out_path, state_to_json(simulate(c, psi)));
      return 0;
    }
    if (random_cmd->parsed()) {
      if (kind == "unitary") emit(out_path, matrix_to_json(random_unitary(dim, rng)));
      if (kind == "state") emit(out_path, state_to_json(random_state(dim, rng)));
      if (kind == "density") emit(out_path, matrix_to_json(random_density_matrix(dim, rng)));
      if (kind == "hermitian") emit(out_path, matrix_to_json(random_hermitian(dim, rng)));
      if (kind == "ginibre") emit(out_path, matrix_to_json(random_ginibre(dim, dim, rng)));
      if (kind == "isometry") {
        emit(out_path, matrix_to_json(random_isometry(dim, cols == 0 ? 1 : cols, rng)));
      }
      return 0;
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "qudsynth: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qudsynth: input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qudsynth: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
