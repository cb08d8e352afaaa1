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

#include "photonsim/circuit.hpp"

#include <string>

#include "photonsim/errors.hpp"

namespace photonsim {

Circuit::Circuit(int modes, bool polarized) : modes_(modes), polarized_(polarized) {
  if (modes <= 0) throw OutOfRange("circuit needs at least one mode");
}

void Circuit::append(int anchor, Component c, std::optional<Polarization> pol_target) {
  if (pol_target) throw InvalidSpec("polarization-targeted placement is not supported");
  validate(c);
  const int k = span(c);
  if (anchor < 0 || anchor + k > modes_) {
    throw OutOfRange(describe(c) + " at mode " + std::to_string(anchor) + " exceeds " +
                     std::to_string(modes_) + " modes");
  }
  if (acts_on_polarization(c) && !polarized_) {
    throw PolarizationMismatch(describe(c) + " needs a polarized register");
  }
  placements_.push_back({std::move(c), anchor, pol_target});
}

void Circuit::append_on(const std::vector<int>& modes, Component c) {
  const int k = span(c);
  if (static_cast<int>(modes.size()) != k) {
    throw InvalidSpec(describe(c) + " spans " + std::to_string(k) + " modes, got " +
                      std::to_string(modes.size()));
  }
  std::vector<bool> used(modes_, false);
  bool contiguous = true;
  for (int i = 0; i < k; ++i) {
    if (modes[i] < 0 || modes[i] >= modes_) {
      throw OutOfRange("mode " + std::to_string(modes[i]) + " outside register");
    }
    if (used[modes[i]]) throw InvalidSpec("repeated mode in placement");
    used[modes[i]] = true;
    if (i > 0 && modes[i] != modes[i - 1] + 1) contiguous = false;
  }
  if (contiguous) {
    append(modes[0], std::move(c), std::nullopt);
    return;
  }
  // Move the listed modes to the front, apply, then move them back.
  std::vector<int> to_front(modes_);
  int next = k;
  for (int m = 0; m < modes_; ++m) {
    if (!used[m]) to_front[m] = next++;
  }
  for (int i = 0; i < k; ++i) to_front[modes[i]] = i;
  std::vector<int> back(modes_);
  for (int m = 0; m < modes_; ++m) back[to_front[m]] = m;
  append(0, PermutationSpec{to_front}, std::nullopt);
  append(0, std::move(c), std::nullopt);
  append(0, PermutationSpec{back}, std::nullopt);
}

void Circuit::append_circuit(const Circuit& sub, const std::vector<int>& mode_map) {
  if (sub.polarized_ != polarized_) {
    throw PolarizationMismatch("sub-circuit polarization differs from host");
  }
  if (static_cast<int>(mode_map.size()) != sub.modes_) {
    throw RegisterMismatch("mode map size differs from sub-circuit modes");
  }
  for (const auto& p : sub.placements_) {
    const int k = span(p.component);
    std::vector<int> modes(mode_map.begin() + p.anchor, mode_map.begin() + p.anchor + k);
    append_on(modes, p.component);
  }
}

Circuit Circuit::add(int anchor, Component c, std::optional<Polarization> pol_target) const& {
  Circuit out = *this;
  out.append(anchor, std::move(c), pol_target);
  return out;
}

Circuit Circuit::add(int anchor, Component c, std::optional<Polarization> pol_target) && {
  append(anchor, std::move(c), pol_target);
  return std::move(*this);
}

Circuit Circuit::add_on(const std::vector<int>& modes, Component c) const& {
  Circuit out = *this;
  out.append_on(modes, std::move(c));
  return out;
}

Circuit Circuit::add_on(const std::vector<int>& modes, Component c) && {
  append_on(modes, std::move(c));
  return std::move(*this);
}

Circuit Circuit::add_circuit(const Circuit& sub, const std::vector<int>& mode_map) const& {
  Circuit out = *this;
  out.append_circuit(sub, mode_map);
  return out;
}

Circuit Circuit::add_circuit(const Circuit& sub, const std::vector<int>& mode_map) && {
  append_circuit(sub, mode_map);
  return std::move(*this);
}

Circuit Circuit::add_circuit(int anchor, const Circuit& sub) const& {
  std::vector<int> map(sub.modes());
  for (int k = 0; k < sub.modes(); ++k) map[k] = anchor + k;
  return add_circuit(sub, map);
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.modes() != b.modes()) throw RegisterMismatch("compose needs equal mode counts");
  if (a.polarized() != b.polarized()) throw PolarizationMismatch("compose across registers");
  std::vector<int> identity(b.modes());
  for (int k = 0; k < b.modes(); ++k) identity[k] = k;
  return a.add_circuit(b, identity);
}

std::vector<int> placement_channels(const Circuit& circuit, const Placement& p) {
  const int k = span(p.component);
  std::vector<int> out;
  if (!circuit.polarized()) {
    for (int i = 0; i < k; ++i) out.push_back(p.anchor + i);
    return out;
  }
  for (int i = 0; i < k; ++i) {
    out.push_back(channel_index(p.anchor + i, Polarization::H));
    out.push_back(channel_index(p.anchor + i, Polarization::V));
  }
  return out;
}

Matrix placement_block(const Circuit& circuit, const Placement& p) {
  Matrix local = local_matrix(p.component);
  if (!circuit.polarized() || acts_on_polarization(p.component)) return local;
  const auto k = local.rows();
  Matrix block = Matrix::Zero(2 * k, 2 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      block(2 * i, 2 * j) = local(i, j);
      block(2 * i + 1, 2 * j + 1) = local(i, j);
    }
  }
  return block;
}

Matrix compile(const Circuit& circuit) {
  Matrix total = Matrix::Identity(circuit.channels(), circuit.channels());
  for (const auto& p : circuit.placements()) {
    const std::vector<int> idx = placement_channels(circuit, p);
    const Matrix block = placement_block(circuit, p);
    Matrix rows = total(idx, Eigen::all);
    total(idx, Eigen::all) = block * rows;
  }
  return total;
}

}  // namespace photonsim
