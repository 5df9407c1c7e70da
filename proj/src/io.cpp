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


#include "qudsynth/io.hpp"

#include <fstream>
#include <stdexcept>

namespace qudsynth {

using nlohmann::json;

namespace {

std::vector<cplx> read_entries(const json& j, std::size_t count) {
  if (!j.contains("re") || !j.contains("im")) throw std::invalid_argument("missing re/im arrays");
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != count || im.size() != count) throw std::invalid_argument("re/im length mismatch");
  std::vector<cplx> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = cplx(re[i], im[i]);
  return out;
}

void write_entries(json& j, std::span<const cplx> v) {
  std::vector<double> re, im;
  re.reserve(v.size());
  im.reserve(v.size());
  for (const auto& x : v) {
    re.push_back(x.real());
    im.push_back(x.imag());
  }
  j["re"] = re;
  j["im"] = im;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  write_entries(j, m.data());
  return j;
}

Matrix matrix_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix needs rows, cols >= 1");
    Matrix m(rows, cols, read_entries(j, rows * cols));
    m.check_finite();
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
  }
}

json state_to_json(const StateVector& v) {
  json j;
  j["dim"] = v.dim();
  write_entries(j, v.amplitudes());
  return j;
}

StateVector state_from_json(const json& j) {
  try {
    if (j.contains("dim")) {
      const auto dim = j.at("dim").get<std::size_t>();
      if (dim < 1) throw std::invalid_argument("state needs dim >= 1");
      return StateVector(read_entries(j, dim));
    }
    const Matrix m = matrix_from_json(j);
    if (m.cols() != 1) throw std::invalid_argument("state must be a single column");
    return StateVector(std::vector<cplx>(m.data().begin(), m.data().end()));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad state JSON: ") + e.what());
  }
}

json circuit_to_json(const Circuit& c) {
  json j;
  j["format"] = kFormatVersion;
  j["d"] = c.d;
  j["n"] = c.n;
  j["metadata"] = c.metadata;
  json gates = json::array();
  for (const auto& g : c.gates) {
    json jg;
    jg["word"] = g.word.to_string(c.d);
    jg["v"] = matrix_to_json(g.v);
    jg["level"] = level_name(g.level);
    if (g.primitive) jg["primitive"] = g.primitive->to_string();
    if (g.elidable) jg["elidable"] = true;
    gates.push_back(std::move(jg));
  }
  j["gates"] = std::move(gates);
  return j;
}

Circuit circuit_from_json(const json& j) {
  try {
    Circuit c(j.at("d").get<int>(), j.at("n").get<int>());
    if (c.d < 2 || c.n < 1) throw std::invalid_argument("circuit needs d >= 2 and n >= 1");
    if (j.contains("metadata")) c.metadata = j.at("metadata").get<std::vector<std::string>>();
    for (const auto& jg : j.at("gates")) {
      Gate g;
      g.word = ControlWord::parse(jg.at("word").get<std::string>(), c.d);
      g.v = matrix_from_json(jg.at("v"));
      g.level = parse_level(jg.value("level", std::string("controlled")));
      if (jg.contains("primitive")) g.primitive = Primitive::parse(jg.at("primitive").get<std::string>());
      g.elidable = jg.value("elidable", false);
      c.gates.push_back(std::move(g));
    }
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad circuit JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << j.dump(1) << '\n';
}

}  // namespace qudsynth
