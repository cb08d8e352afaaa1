// Copyright 2026 The photonsim Authors
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

#include "photonsim/cli/circuit_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "photonsim/errors.hpp"
#include "photonsim/qubit.hpp"

namespace photonsim {
namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidSpec(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw InvalidSpec(where + ": unknown key '" + key + "'");
  }
}

int get_int(const json& j, const char* key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidSpec(where + ": '" + key + "' must be an integer");
  return v.get<int>();
}

double get_angle(const json& j, const char* key, double fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw InvalidSpec(where + ": '" + key + "' must be a number in radians");
  }
  return v.get<double>();
}

std::vector<int> get_int_list(const json& j, const char* key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_array()) throw InvalidSpec(where + ": '" + key + "' must be a list of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) {
      throw InvalidSpec(where + ": '" + key + "' must be a list of integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

std::string get_string(const json& j, const char* key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_string()) throw InvalidSpec(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

Matrix get_matrix(const json& j, const std::string& where) {
  const json& rows = j.at("matrix");
  auto bad = [&]() { return InvalidSpec(where + ": 'matrix' must be rows of [re, im] pairs"); };
  if (!rows.is_array() || rows.empty()) throw bad();
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw bad();
    for (Eigen::Index c = 0; c < n; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) throw bad();
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Component component_from(const json& j, const std::string& type, const std::string& where) {
  static const std::set<std::string> placement = {"type", "anchor", "modes"};
  auto keys = [&](std::set<std::string> extra) {
    extra.insert(placement.begin(), placement.end());
    check_keys(j, extra, where);
  };
  if (type == "BS") {
    BeamSplitterSpec<> s;
    if (j.contains("convention")) s.convention = parse_bs_convention(get_string(j, "convention", where));
    if (uses_four_phases(s.convention)) {
      keys({"convention", "theta", "phi_tl", "phi_bl", "phi_tr", "phi_br"});
      s.phi_tl = get_angle(j, "phi_tl", 0, where);
      s.phi_bl = get_angle(j, "phi_bl", 0, where);
      s.phi_tr = get_angle(j, "phi_tr", 0, where);
      s.phi_br = get_angle(j, "phi_br", 0, where);
    } else {
      keys({"convention", "theta", "phi_r", "phi_t", "phi_0"});
      s.phi_r = get_angle(j, "phi_r", 0, where);
      s.phi_t = get_angle(j, "phi_t", 0, where);
      s.phi_0 = get_angle(j, "phi_0", 0, where);
    }
    s.theta = get_angle(j, "theta", kPi / 2, where);
    return s;
  }
  if (type == "PS") {
    keys({"phi"});
    if (!j.contains("phi")) throw InvalidSpec(where + ": PS needs 'phi'");
    return PhaseShifterSpec<>{get_angle(j, "phi", 0, where)};
  }
  if (type == "PERM") {
    keys({"perm"});
    return PermutationSpec{get_int_list(j, "perm", where)};
  }
  if (type == "WP") {
    keys({"delta", "xi"});
    return WavePlateSpec<>{get_angle(j, "delta", 0, where), get_angle(j, "xi", 0, where)};
  }
  if (type == "HWP") {
    keys({"xi"});
    return half_wave_plate(get_angle(j, "xi", 0, where));
  }
  if (type == "QWP") {
    keys({"xi"});
    return quarter_wave_plate(get_angle(j, "xi", 0, where));
  }
  if (type == "PR") {
    keys({"theta"});
    return PolarizationRotatorSpec<>{get_angle(j, "theta", 0, where)};
  }
  if (type == "PBS") {
    keys({});
    return PbsSpec{};
  }
  if (type == "UNITARY") {
    keys({"matrix"});
    return UnitarySpec{get_matrix(j, where)};
  }
  throw InvalidSpec(where + ": unknown component type '" + type + "'");
}

Circuit add_gate(Circuit c, const json& j, int qubits, const std::string& where) {
  check_keys(j, {"type", "name", "qubits", "theta", "aux"}, where);
  if (c.polarized()) throw InvalidGate(where + ": gates need an unpolarized dual-rail register");
  std::optional<double> theta;
  if (j.contains("theta")) theta = get_angle(j, "theta", 0, where);
  GateBuild g = gate_by_name(get_string(j, "name", where), get_int_list(j, "qubits", where),
                             qubits, theta);
  std::vector<int> map(g.circuit.modes());
  for (int m = 0; m < g.data_modes(); ++m) map[m] = m;
  std::vector<int> aux;
  if (j.contains("aux")) aux = get_int_list(j, "aux", where);
  if (static_cast<int>(aux.size()) != g.aux_modes()) {
    throw InvalidGate(where + ": gate needs " + std::to_string(g.aux_modes()) +
                      " ancilla modes in 'aux'");
  }
  for (int k = 0; k < g.aux_modes(); ++k) {
    if (aux[k] < g.data_modes()) throw InvalidGate(where + ": ancilla mode overlaps data qubits");
    map[g.data_modes() + k] = aux[k];
  }
  return std::move(c).add_circuit(g.circuit, map);
}

Circuit add_component(Circuit c, const json& j, int qubits, const std::string& where) {
  if (!j.is_object()) throw InvalidSpec(where + ": expected an object");
  if (!j.contains("type")) throw InvalidSpec(where + ": missing 'type'");
  const std::string type = get_string(j, "type", where);
  if (type == "gate") return add_gate(std::move(c), j, qubits, where);
  Component comp = component_from(j, type, where);
  const bool has_anchor = j.contains("anchor"), has_modes = j.contains("modes");
  if (has_anchor == has_modes) throw InvalidSpec(where + ": give exactly one of 'anchor' or 'modes'");
  if (has_anchor) return std::move(c).add(get_int(j, "anchor", where), std::move(comp));
  return std::move(c).add_on(get_int_list(j, "modes", where), std::move(comp));
}

json angle_pairs(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

CircuitFile circuit_from_json(const json& j) {
  check_keys(j, {"modes", "polarized", "qubits", "components", "gates", "input", "postselect",
                 "description"},
             "circuit");
  if (!j.contains("modes")) throw InvalidSpec("circuit: missing 'modes'");
  if (!j.contains("components")) throw InvalidSpec("circuit: missing 'components'");
  const int modes = get_int(j, "modes", "circuit");
  bool polarized = false;
  if (j.contains("polarized")) {
    if (!j.at("polarized").is_boolean()) throw InvalidSpec("circuit: 'polarized' must be a boolean");
    polarized = j.at("polarized").get<bool>();
  }
  if (modes <= 0) throw InvalidSpec("circuit: 'modes' must be positive");

  CircuitFile f;
  f.circuit = Circuit(modes, polarized);
  f.qubits = polarized ? 0 : modes / 2;
  if (j.contains("qubits")) {
    f.qubits = get_int(j, "qubits", "circuit");
    if (f.qubits < 0 || 2 * f.qubits > modes) throw InvalidSpec("circuit: 'qubits' exceeds modes");
  }
  if (j.contains("input")) f.input = get_string(j, "input", "circuit");
  if (j.contains("postselect")) f.postselect = get_string(j, "postselect", "circuit");

  const json& comps = j.at("components");
  if (!comps.is_array()) throw InvalidSpec("circuit: 'components' must be a list");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    f.circuit = add_component(std::move(f.circuit), comps[i], f.qubits,
                              "components[" + std::to_string(i) + "]");
  }
  if (j.contains("gates")) {
    const json& gates = j.at("gates");
    if (!gates.is_array()) throw InvalidSpec("circuit: 'gates' must be a list");
    for (std::size_t i = 0; i < gates.size(); ++i) {
      json g = gates[i];
      if (!g.is_object()) throw InvalidSpec("gates[" + std::to_string(i) + "]: expected an object");
      if (g.contains("type")) throw InvalidSpec("gates[" + std::to_string(i) + "]: unknown key 'type'");
      g["type"] = "gate";
      f.circuit = add_gate(std::move(f.circuit), g, f.qubits, "gates[" + std::to_string(i) + "]");
    }
  }
  return f;
}

CircuitFile parse_circuit_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
  return circuit_from_json(j);
}

CircuitFile load_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open circuit file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_circuit_json(buf.str());
}

json circuit_to_json(const Circuit& circuit) {
  json comps = json::array();
  for (const auto& p : circuit.placements()) {
    json r;
    r["anchor"] = p.anchor;
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, BeamSplitterSpec<>>) {
            r["type"] = "BS";
            r["convention"] = std::string(to_string(c.convention));
            r["theta"] = c.theta;
            if (uses_four_phases(c.convention)) {
              r["phi_tl"] = c.phi_tl;
              r["phi_bl"] = c.phi_bl;
              r["phi_tr"] = c.phi_tr;
              r["phi_br"] = c.phi_br;
            } else {
              r["phi_r"] = c.phi_r;
              r["phi_t"] = c.phi_t;
              r["phi_0"] = c.phi_0;
            }
          } else if constexpr (std::is_same_v<T, PhaseShifterSpec<>>) {
            r["type"] = "PS";
            r["phi"] = c.phi;
          } else if constexpr (std::is_same_v<T, PermutationSpec>) {
            r["type"] = "PERM";
            r["perm"] = c.target;
          } else if constexpr (std::is_same_v<T, WavePlateSpec<>>) {
            r["type"] = "WP";
            r["delta"] = c.delta;
            r["xi"] = c.xi;
          } else if constexpr (std::is_same_v<T, PolarizationRotatorSpec<>>) {
            r["type"] = "PR";
            r["theta"] = c.theta;
          } else if constexpr (std::is_same_v<T, PbsSpec>) {
            r["type"] = "PBS";
          } else {
            r["type"] = "UNITARY";
            r["matrix"] = angle_pairs(c.matrix);
          }
        },
        p.component);
    comps.push_back(r);
  }
  json j;
  j["modes"] = circuit.modes();
  j["polarized"] = circuit.polarized();
  j["components"] = comps;
  return j;
}

}  // namespace photonsim
