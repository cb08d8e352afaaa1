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

#ifndef PHOTONSIM_QUBIT_HPP
#define PHOTONSIM_QUBIT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photonsim/circuit.hpp"
#include "photonsim/postselect.hpp"

namespace photonsim {

// Dual rail: qubit i lives in modes (2i, 2i+1); |0> = one photon in 2i,
// |1> = one photon in 2i+1.
FockState encode_dual_rail(const std::vector<int>& bits);

// Reads the first 2*qubits modes; nullopt unless every pair holds exactly one
// photon. Modes past the data pairs are ignored.
std::optional<std::vector<int>> decode_dual_rail(const FockState& state, int qubits);

// Two qubits in one photon over two polarized spatial modes: the first bit
// picks the mode (1 -> mode 0), the second the polarization (1 -> V).
//   00 -> |0,1:H>   01 -> |0,1:V>   10 -> |1:H,0>   11 -> |1:V,0>
FockState encode_polarization(const std::vector<int>& bits);
std::optional<std::vector<int>> decode_polarization(const FockState& state);

std::string bits_to_string(const std::vector<int>& bits);
std::vector<int> bits_from_string(std::string_view text);

enum class Gate { X, Y, Z, H, S, Sdag, T, Tdag, RX, RY, RZ };

Gate parse_gate(std::string_view name);
std::string_view to_string(Gate g);
bool takes_angle(Gate g);

// A linear-optical realisation of a qubit operation on a dual-rail register of
// `qubits` qubits. Ancilla modes follow the data modes; herald_input gives
// their input photons, and `condition` must hold on the output for the gate to
// have acted.
struct GateBuild {
  Circuit circuit;
  int qubits = 0;
  std::vector<int> herald_input;
  std::optional<PostSelect> condition;
  double success_probability = 1.0;

  int data_modes() const { return 2 * qubits; }
  int aux_modes() const { return circuit.modes() - 2 * qubits; }

  // Dual-rail data plus herald photons.
  FockState input(const std::vector<int>& bits) const;
};

GateBuild identity_gate(int qubits);
GateBuild single_qubit_gate(Gate g, int qubit, int qubits, double theta = 0.0);
GateBuild swap_gate(int a, int b, int qubits);

// Post-selected CNOT on 6 modes (two vacuum ancillas), success 1/9. The
// coincidence condition requires one photon per data qubit and none in the
// ancillas. The component list leaves a Z on the control after selection.
Circuit ralph_cnot_core();
GateBuild ralph_cnot(int control, int target, int qubits);

// Heralded CNOT on 6 modes: two ancilla photons in, one photon in each
// ancilla out, success 2/27. Hadamards on the target pair around a heralded
// CZ acting on the |1> rails.
Matrix heralded_cz_matrix();
Circuit heralded_cnot_core();
GateBuild heralded_cnot(int control, int target, int qubits);

enum class Pauli { X, Y, Z };
GateBuild controlled_pauli(Pauli p, int control, int target, int qubits);

// Toffoli from single-qubit gates and six heralded CNOTs.
GateBuild toffoli_decomposed(int c0, int c1, int target, int qubits);

// a then b on the same qubits; b's ancillas are appended after a's.
GateBuild then(const GateBuild& a, const GateBuild& b);

// Gate lookup by name for circuit files: single-qubit gate names, SWAP, CNOT
// (heralded), CNOT_PS (post-selected), CZ, CY, CCX.
GateBuild gate_by_name(std::string_view name, const std::vector<int>& targets, int qubits,
                       std::optional<double> theta = std::nullopt);

}  // namespace photonsim

#endif  // PHOTONSIM_QUBIT_HPP
