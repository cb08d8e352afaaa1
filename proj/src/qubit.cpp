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

#include "photonsim/qubit.hpp"

#include <cmath>

#include "photonsim/errors.hpp"

namespace photonsim {
namespace {

void check_qubit(int q, int qubits) {
  if (q < 0 || q >= qubits) {
    throw InvalidGate("qubit " + std::to_string(q) + " outside " + std::to_string(qubits) +
                      "-qubit register");
  }
}

void check_pair(int a, int b, int qubits) {
  check_qubit(a, qubits);
  check_qubit(b, qubits);
  if (a == b) throw InvalidGate("two-qubit gate on a single qubit");
}

// Runs `core` on the host modes listed in `map`, with one permutation moving
// those modes to the front before and one moving them back after.
Circuit sandwich(int modes, const Circuit& core, const std::vector<int>& map) {
  std::vector<int> to_core(modes, -1);
  for (int k = 0; k < static_cast<int>(map.size()); ++k) to_core[map[k]] = k;
  int next = static_cast<int>(map.size());
  for (int m = 0; m < modes; ++m) {
    if (to_core[m] < 0) to_core[m] = next++;
  }
  std::vector<int> back(modes);
  for (int m = 0; m < modes; ++m) back[to_core[m]] = m;
  bool identity = true;
  for (int m = 0; m < modes; ++m) identity = identity && to_core[m] == m;

  Circuit c(modes);
  if (!identity) c = std::move(c).add(0, PermutationSpec{to_core});
  c = c.add_circuit(0, core);
  if (!identity) c = std::move(c).add(0, PermutationSpec{back});
  return c;
}

PostSelect remap(const PostSelect& p, const std::vector<int>& map) {
  PostSelect out = p;
  for (auto& c : out.clauses) {
    for (int& m : c.modes) m = map[m];
  }
  return out;
}

BeamSplitterSpec<> bs(BsConvention conv, double theta = kPi / 2) {
  BeamSplitterSpec<> s;
  s.convention = conv;
  s.theta = theta;
  return s;
}

GateBuild two_qubit_from_core(const Circuit& core, const std::vector<int>& map, int qubits,
                              std::vector<int> herald, const PostSelect& core_condition,
                              double success) {
  return GateBuild{sandwich(2 * qubits + 2, core, map), qubits, std::move(herald),
                   remap(core_condition, map), success};
}

}  // namespace

FockState encode_dual_rail(const std::vector<int>& bits) {
  std::vector<int> occ;
  occ.reserve(2 * bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidOccupation("qubit value must be 0 or 1");
    occ.push_back(b == 0 ? 1 : 0);
    occ.push_back(b == 0 ? 0 : 1);
  }
  return FockState(std::move(occ));
}

std::optional<std::vector<int>> decode_dual_rail(const FockState& state, int qubits) {
  if (state.polarized() || 2 * qubits > state.channels()) return std::nullopt;
  std::vector<int> bits;
  for (int i = 0; i < qubits; ++i) {
    const int a = state[2 * i], b = state[2 * i + 1];
    if (a == 1 && b == 0) {
      bits.push_back(0);
    } else if (a == 0 && b == 1) {
      bits.push_back(1);
    } else {
      return std::nullopt;
    }
  }
  return bits;
}

FockState encode_polarization(const std::vector<int>& bits) {
  if (bits.size() != 2 || (bits[0] != 0 && bits[0] != 1) || (bits[1] != 0 && bits[1] != 1)) {
    throw InvalidOccupation("polarization encoding takes two bits");
  }
  std::vector<int> occ(4, 0);
  const int mode = bits[0] == 1 ? 0 : 1;
  occ[channel_index(mode, bits[1] == 1 ? Polarization::V : Polarization::H)] = 1;
  return FockState(std::move(occ), true);
}

std::optional<std::vector<int>> decode_polarization(const FockState& state) {
  if (!state.polarized() || state.modes() != 2 || state.photons() != 1) return std::nullopt;
  for (int ch = 0; ch < 4; ++ch) {
    if (state[ch] == 1) return std::vector<int>{ch / 2 == 0 ? 1 : 0, ch % 2};
  }
  return std::nullopt;
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

std::vector<int> bits_from_string(std::string_view text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidOccupation("bit string may only contain 0 and 1");
    bits.push_back(c - '0');
  }
  return bits;
}

Gate parse_gate(std::string_view name) {
  if (name == "X") return Gate::X;
  if (name == "Y") return Gate::Y;
  if (name == "Z") return Gate::Z;
  if (name == "H") return Gate::H;
  if (name == "S") return Gate::S;
  if (name == "Sdag" || name == "SDAG") return Gate::Sdag;
  if (name == "T") return Gate::T;
  if (name == "Tdag" || name == "TDAG") return Gate::Tdag;
  if (name == "RX") return Gate::RX;
  if (name == "RY") return Gate::RY;
  if (name == "RZ") return Gate::RZ;
  throw InvalidGate("unknown gate '" + std::string(name) + "'");
}

std::string_view to_string(Gate g) {
  switch (g) {
    case Gate::X: return "X";
    case Gate::Y: return "Y";
    case Gate::Z: return "Z";
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::Sdag: return "Sdag";
    case Gate::T: return "T";
    case Gate::Tdag: return "Tdag";
    case Gate::RX: return "RX";
    case Gate::RY: return "RY";
    case Gate::RZ: return "RZ";
  }
  return "?";
}

bool takes_angle(Gate g) { return g == Gate::RX || g == Gate::RY || g == Gate::RZ; }

FockState GateBuild::input(const std::vector<int>& bits) const {
  if (static_cast<int>(bits.size()) != qubits) {
    throw RegisterMismatch("expected " + std::to_string(qubits) + " input bits");
  }
  std::vector<int> occ = encode_dual_rail(bits).occupations();
  occ.insert(occ.end(), herald_input.begin(), herald_input.end());
  return FockState(std::move(occ));
}

GateBuild identity_gate(int qubits) {
  if (qubits <= 0) throw InvalidGate("register needs at least one qubit");
  return GateBuild{Circuit(2 * qubits), qubits, {}, std::nullopt, 1.0};
}

GateBuild single_qubit_gate(Gate g, int qubit, int qubits, double theta) {
  check_qubit(qubit, qubits);
  const int a = 2 * qubit;
  Circuit c(2 * qubits);
  auto ps = [](double phi) { return PhaseShifterSpec<>{phi}; };
  switch (g) {
    case Gate::X:
      c = std::move(c).add(a, PermutationSpec{{1, 0}});
      break;
    case Gate::Y:
      c = std::move(c).add(a, PermutationSpec{{1, 0}}).add(a, ps(-kPi / 2)).add(a + 1, ps(kPi / 2));
      break;
    case Gate::Z:
      c = std::move(c).add(a + 1, ps(kPi));
      break;
    case Gate::H:
      c = std::move(c).add(a, bs(BsConvention::H));
      break;
    case Gate::S:
      c = std::move(c).add(a + 1, ps(kPi / 2));
      break;
    case Gate::Sdag:
      c = std::move(c).add(a + 1, ps(-kPi / 2));
      break;
    case Gate::T:
      c = std::move(c).add(a + 1, ps(kPi / 4));
      break;
    case Gate::Tdag:
      c = std::move(c).add(a + 1, ps(-kPi / 4));
      break;
    case Gate::RX:
      c = std::move(c).add(a, ps(kPi)).add(a, bs(BsConvention::Rx, theta)).add(a, ps(kPi));
      break;
    case Gate::RY:
      c = std::move(c).add(a, bs(BsConvention::Ry, theta));
      break;
    case Gate::RZ:
      c = std::move(c)
              .add(a, bs(BsConvention::H))
              .add(a, ps(kPi))
              .add(a, bs(BsConvention::Rx, theta))
              .add(a, ps(kPi))
              .add(a, bs(BsConvention::H));
      break;
  }
  return GateBuild{std::move(c), qubits, {}, std::nullopt, 1.0};
}

GateBuild swap_gate(int a, int b, int qubits) {
  check_pair(a, b, qubits);
  std::vector<int> target(2 * qubits);
  for (int m = 0; m < 2 * qubits; ++m) target[m] = m;
  std::swap(target[2 * a], target[2 * b]);
  std::swap(target[2 * a + 1], target[2 * b + 1]);
  return GateBuild{Circuit(2 * qubits).add(0, PermutationSpec{target}), qubits, {}, std::nullopt,
                   1.0};
}

Circuit ralph_cnot_core() {
  const double theta = 2 * std::acos(std::sqrt(1.0 / 3.0));
  BeamSplitterSpec<> third = bs(BsConvention::H, theta);
  third.phi_tl = -kPi / 2;
  third.phi_bl = kPi;
  third.phi_tr = kPi / 2;
  return Circuit(6)
      .add(0, third)
      .add(3, bs(BsConvention::H))
      .add(2, third)
      .add(4, bs(BsConvention::H, theta))
      .add(3, bs(BsConvention::H));
}

GateBuild ralph_cnot(int control, int target, int qubits) {
  check_pair(control, target, qubits);
  // Core modes: ancilla, control pair, target pair, ancilla.
  const int d = 2 * qubits;
  const std::vector<int> map = {d, 2 * control, 2 * control + 1, 2 * target, 2 * target + 1, d + 1};
  PostSelect cond = parse_postselect("[1,2]==1 & [3,4]==1 & [0]==0 & [5]==0");
  return two_qubit_from_core(ralph_cnot_core(), map, qubits, {0, 0}, cond, 1.0 / 9.0);
}

Matrix heralded_cz_matrix() {
  const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  const double p = std::sqrt(3 + r6) / 3, m = std::sqrt(3 - r6) / 3;
  const double q = std::sqrt((3 + r6) / 2) / 3, s = std::sqrt(1.0 / 6 - 1 / (3 * r6));
  Matrix k(4, 4);
  k << -1.0 / 3, -r2 / 3, r2 / 3, 2.0 / 3,
       r2 / 3, -1.0 / 3, -2.0 / 3, r2 / 3,
       -p, m, -q, s,
       -m, -p, -s, -q;
  return k;
}

Circuit heralded_cnot_core() {
  return Circuit(6)
      .add(2, bs(BsConvention::H))
      .add_on({1, 3, 4, 5}, UnitarySpec{heralded_cz_matrix()})
      .add(2, bs(BsConvention::H));
}

GateBuild heralded_cnot(int control, int target, int qubits) {
  check_pair(control, target, qubits);
  // Core modes: control pair, target pair, two ancillas.
  const int d = 2 * qubits;
  const std::vector<int> map = {2 * control, 2 * control + 1, 2 * target, 2 * target + 1, d, d + 1};
  PostSelect cond = parse_postselect("[4]==1 & [5]==1");
  return two_qubit_from_core(heralded_cnot_core(), map, qubits, {1, 1}, cond, 2.0 / 27.0);
}

GateBuild controlled_pauli(Pauli p, int control, int target, int qubits) {
  GateBuild cx = heralded_cnot(control, target, qubits);
  switch (p) {
    case Pauli::X:
      return cx;
    case Pauli::Z: {
      GateBuild h = single_qubit_gate(Gate::H, target, qubits);
      return then(then(h, cx), h);
    }
    case Pauli::Y:
      return then(then(single_qubit_gate(Gate::Sdag, target, qubits), cx),
                  single_qubit_gate(Gate::S, target, qubits));
  }
  return cx;
}

GateBuild toffoli_decomposed(int c0, int c1, int t, int qubits) {
  check_qubit(c0, qubits);
  check_qubit(c1, qubits);
  check_qubit(t, qubits);
  if (c0 == c1 || c0 == t || c1 == t) throw InvalidGate("Toffoli needs three distinct qubits");
  auto g = [&](Gate gate, int q) { return single_qubit_gate(gate, q, qubits); };
  auto cx = [&](int c, int x) { return heralded_cnot(c, x, qubits); };
  const GateBuild seq[] = {
      g(Gate::H, t),    cx(c1, t),        g(Gate::Tdag, t), cx(c0, t),  g(Gate::T, t),
      cx(c1, t),        g(Gate::Tdag, t), cx(c0, t),        g(Gate::T, c1), g(Gate::T, t),
      cx(c0, c1),       g(Gate::H, t),    g(Gate::T, c0),   g(Gate::Tdag, c1), cx(c0, c1),
  };
  GateBuild out = identity_gate(qubits);
  for (const auto& step : seq) out = then(out, step);
  return out;
}

GateBuild then(const GateBuild& a, const GateBuild& b) {
  if (a.qubits != b.qubits) throw InvalidGate("composed gates act on different registers");
  const int data = a.data_modes();
  const int aa = a.aux_modes(), ab = b.aux_modes();
  const int modes = data + aa + ab;
  std::vector<int> map_a(data + aa), map_b(data + ab);
  for (int m = 0; m < data + aa; ++m) map_a[m] = m;
  for (int m = 0; m < data; ++m) map_b[m] = m;
  for (int k = 0; k < ab; ++k) map_b[data + k] = data + aa + k;

  GateBuild out{Circuit(modes).add_circuit(a.circuit, map_a).add_circuit(b.circuit, map_b),
                a.qubits, a.herald_input, a.condition, a.success_probability * b.success_probability};
  out.herald_input.insert(out.herald_input.end(), b.herald_input.begin(), b.herald_input.end());
  if (b.condition) {
    PostSelect cb = remap(*b.condition, map_b);
    out.condition = out.condition ? (*out.condition & cb) : cb;
  }
  return out;
}

GateBuild gate_by_name(std::string_view name, const std::vector<int>& targets, int qubits,
                       std::optional<double> theta) {
  auto need = [&](std::size_t n) {
    if (targets.size() != n) {
      throw InvalidGate(std::string(name) + " takes " + std::to_string(n) + " qubit(s)");
    }
  };
  if (name == "SWAP") {
    need(2);
    return swap_gate(targets[0], targets[1], qubits);
  }
  if (name == "CNOT" || name == "CX") {
    need(2);
    return heralded_cnot(targets[0], targets[1], qubits);
  }
  if (name == "CNOT_PS") {
    need(2);
    return ralph_cnot(targets[0], targets[1], qubits);
  }
  if (name == "CZ") {
    need(2);
    return controlled_pauli(Pauli::Z, targets[0], targets[1], qubits);
  }
  if (name == "CY") {
    need(2);
    return controlled_pauli(Pauli::Y, targets[0], targets[1], qubits);
  }
  if (name == "CCX" || name == "TOFFOLI") {
    need(3);
    return toffoli_decomposed(targets[0], targets[1], targets[2], qubits);
  }
  Gate g = parse_gate(name);
  need(1);
  if (takes_angle(g) && !theta) throw InvalidGate(std::string(name) + " needs an angle");
  if (!takes_angle(g) && theta) throw InvalidGate(std::string(name) + " takes no angle");
  return single_qubit_gate(g, targets[0], qubits, theta.value_or(0.0));
}

}  // namespace photonsim
