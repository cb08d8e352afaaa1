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

#ifndef PHOTONSIM_GROVER_HPP
#define PHOTONSIM_GROVER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "photonsim/postselect.hpp"
#include "photonsim/qubit.hpp"

namespace photonsim {

// Two-qubit search with one photon carrying both qubits (spatial mode and
// polarization, see encode_polarization). One iteration finds the target.

enum class GroverTarget { T00, T01, T10, T11 };
enum class OracleVariant { PerModeRotator, UniformRotator };

GroverTarget parse_grover_target(std::string_view bits);
std::string_view to_string(GroverTarget t);
OracleVariant parse_oracle_variant(std::string_view name);  // "per-mode" or "uniform"
std::string_view to_string(OracleVariant v);

// Each acts on two polarized modes.
Circuit grover_init();
Circuit grover_oracle(GroverTarget target, OracleVariant variant);
Circuit grover_inversion();

// Four polarized modes; sends each encoded basis state to its own spatial
// mode, see detection_label.
Circuit grover_detection();

// init, oracle and inversion on modes 0-1 followed by detection.
Circuit grover_circuit(GroverTarget target, OracleVariant variant);

// |0,1:H,0,0>
FockState grover_input();

inline const std::array<std::string, 4> kGroverLabels = {"00", "01", "10", "11"};

// Detector mode to two-bit label: 0 -> "11", 1 -> "10", 2 -> "01", 3 -> "00".
std::string detection_label(int mode);

struct GroverResult {
  // Indexed like kGroverLabels.
  std::array<double, 4> probabilities{};
  std::map<std::string, std::uint64_t> counts;
  StateVector output;
};

GroverResult run_grover(GroverTarget target, OracleVariant variant, std::uint64_t shots = 0,
                        std::uint64_t seed = 0);

// Three-qubit dual-rail search for |01> on qubits 0 and 1, with qubit 2 as the
// phase-kickback ancilla prepared in |->. Uses a decomposed Toffoli and one
// CNOT, all heralded, giving 20 modes and 17 photons.
GateBuild dual_rail_grover_3q_program(bool with_oracle = true);

struct DualRailGroverResult {
  double success_probability = 0.0;
  // Conditioned amplitudes and probabilities by 3-bit label (q0 q1 q2).
  std::map<std::string, Complex> amplitudes;
  std::map<std::string, double> probabilities;
  // Marginal over q0 q1.
  std::map<std::string, double> marginal;
  std::map<std::string, std::uint64_t> counts;
};

DualRailGroverResult dual_rail_grover_3q(std::uint64_t seed, std::uint64_t shots,
                                         bool with_oracle = true);

}  // namespace photonsim

#endif  // PHOTONSIM_GROVER_HPP
