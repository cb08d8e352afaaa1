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

#ifndef PHOTONSIM_CLI_CIRCUIT_FILE_HPP
#define PHOTONSIM_CLI_CIRCUIT_FILE_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "photonsim/circuit.hpp"

namespace photonsim {

// A circuit read from JSON, see README for the schema.
struct CircuitFile {
  Circuit circuit{1};
  // Dual-rail qubits used for decoding outputs and placing gate records.
  int qubits = 0;
  std::optional<std::string> input;
  std::optional<std::string> postselect;
};

// Malformed JSON throws ParseError (byte offset into the text); schema
// violations throw InvalidSpec, gate problems InvalidGate.
CircuitFile parse_circuit_json(std::string_view text);
CircuitFile circuit_from_json(const nlohmann::json& j);
CircuitFile load_circuit_file(const std::string& path);

// Writes placements as component records; reading the result back compiles to
// the same unitary.
nlohmann::json circuit_to_json(const Circuit& circuit);

}  // namespace photonsim

#endif  // PHOTONSIM_CLI_CIRCUIT_FILE_HPP
