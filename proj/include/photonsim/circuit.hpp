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

#ifndef PHOTONSIM_CIRCUIT_HPP
#define PHOTONSIM_CIRCUIT_HPP

#include <optional>
#include <vector>

#include "photonsim/components.hpp"
#include "photonsim/fock.hpp"

namespace photonsim {

struct Placement {
  Component component;
  int anchor = 0;
  // Reserved: restricting a spatial element to one polarization. Rejected.
  std::optional<Polarization> pol_target;
};

// Ordered list of placements on a fixed register. Values are immutable; every
// add returns a new circuit.
class Circuit {
 public:
  explicit Circuit(int modes, bool polarized = false);

  int modes() const { return modes_; }
  int channels() const { return polarized_ ? 2 * modes_ : modes_; }
  bool polarized() const { return polarized_; }
  const std::vector<Placement>& placements() const { return placements_; }

  [[nodiscard]] Circuit add(int anchor, Component c,
                            std::optional<Polarization> pol_target = std::nullopt) const&;
  [[nodiscard]] Circuit add(int anchor, Component c,
                            std::optional<Polarization> pol_target = std::nullopt) &&;

  // Places c on an arbitrary list of distinct modes. Lists that are not an
  // ascending contiguous run are routed through a permutation sandwich.
  [[nodiscard]] Circuit add_on(const std::vector<int>& modes, Component c) const&;
  [[nodiscard]] Circuit add_on(const std::vector<int>& modes, Component c) &&;

  // Appends every placement of sub, with sub mode k sent to mode_map[k].
  [[nodiscard]] Circuit add_circuit(const Circuit& sub, const std::vector<int>& mode_map) const&;
  [[nodiscard]] Circuit add_circuit(const Circuit& sub, const std::vector<int>& mode_map) &&;
  [[nodiscard]] Circuit add_circuit(int anchor, const Circuit& sub) const&;

 private:
  void append(int anchor, Component c, std::optional<Polarization> pol_target);
  void append_on(const std::vector<int>& modes, Component c);
  void append_circuit(const Circuit& sub, const std::vector<int>& mode_map);

  int modes_;
  bool polarized_;
  std::vector<Placement> placements_;
};

// a followed by b on the same register.
Circuit compose(const Circuit& a, const Circuit& b);

// Channel indices touched by a placement, in the order of its local matrix.
std::vector<int> placement_channels(const Circuit& circuit, const Placement& p);

// Local matrix of a placement as seen by the register: spatial elements on a
// polarized register act identically on H and V.
Matrix placement_block(const Circuit& circuit, const Placement& p);

// Full channel-space unitary; later placements multiply on the left.
Matrix compile(const Circuit& circuit);

}  // namespace photonsim

#endif  // PHOTONSIM_CIRCUIT_HPP
