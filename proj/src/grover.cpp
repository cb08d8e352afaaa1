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

#include "photonsim/grover.hpp"

#include "photonsim/errors.hpp"
#include "photonsim/state_string.hpp"

namespace photonsim {
namespace {

BeamSplitterSpec<> ry(double theta) {
  BeamSplitterSpec<> s;
  s.convention = BsConvention::Ry;
  s.theta = theta;
  return s;
}

PhaseShifterSpec<> ps(double phi) { return {phi}; }

PolarizationRotatorSpec<> pr(double theta) { return {theta}; }

// HWP(0) then PS(-pi/2): diag(1, -1) on (H, V).
Circuit flip_v(Circuit c, int mode) {
  return std::move(c).add(mode, half_wave_plate(0.0)).add(mode, ps(-kPi / 2));
}

}  // namespace

GroverTarget parse_grover_target(std::string_view bits) {
  if (bits == "00") return GroverTarget::T00;
  if (bits == "01") return GroverTarget::T01;
  if (bits == "10") return GroverTarget::T10;
  if (bits == "11") return GroverTarget::T11;
  throw InvalidSpec("search target must be one of 00, 01, 10, 11");
}

std::string_view to_string(GroverTarget t) {
  switch (t) {
    case GroverTarget::T00: return "00";
    case GroverTarget::T01: return "01";
    case GroverTarget::T10: return "10";
    case GroverTarget::T11: return "11";
  }
  return "?";
}

OracleVariant parse_oracle_variant(std::string_view name) {
  if (name == "per-mode") return OracleVariant::PerModeRotator;
  if (name == "uniform") return OracleVariant::UniformRotator;
  throw InvalidSpec("oracle variant must be per-mode or uniform");
}

std::string_view to_string(OracleVariant v) {
  return v == OracleVariant::PerModeRotator ? "per-mode" : "uniform";
}

Circuit grover_init() {
  return Circuit(2, true)
      .add(1, half_wave_plate(kPi / 8))
      .add(1, ps(-kPi / 2))
      .add(0, ry(kPi / 2))
      .add(0, ps(-kPi));
}

Circuit grover_oracle(GroverTarget target, OracleVariant variant) {
  Circuit c(2, true);
  if (variant == OracleVariant::PerModeRotator) {
    switch (target) {
      case GroverTarget::T00: return c.add(1, pr(-kPi / 2));
      case GroverTarget::T01: return c.add(1, pr(kPi / 2));
      case GroverTarget::T10: return c.add(0, pr(-kPi / 2));
      case GroverTarget::T11: return c.add(0, pr(kPi / 2));
    }
  }
  switch (target) {
    case GroverTarget::T00:
      return flip_v(flip_v(c, 1), 0).add(0, pr(kPi / 2));
    case GroverTarget::T01:
      return flip_v(flip_v(c, 1).add(0, pr(kPi / 2)), 0);
    case GroverTarget::T10:
      return flip_v(flip_v(flip_v(flip_v(c, 0).add(0, pr(kPi / 2)), 0), 1), 1);
    case GroverTarget::T11:
      return c.add(0, pr(kPi / 2));
  }
  return c;
}

Circuit grover_inversion() {
  return Circuit(2, true)
      .add(0, ry(kPi / 2))
      .add(1, half_wave_plate(kPi / 4))
      .add(1, ps(-kPi / 2))
      .add(0, ry(kPi / 2));
}

Circuit grover_detection() {
  return Circuit(4, true).add(1, PermutationSpec{{1, 0}}).add(0, PbsSpec{}).add(2, PbsSpec{});
}

Circuit grover_circuit(GroverTarget target, OracleVariant variant) {
  Circuit front = compose(compose(grover_init(), grover_oracle(target, variant)), grover_inversion());
  return Circuit(4, true).add_circuit(0, front).add_circuit(0, grover_detection());
}

FockState grover_input() { return parse_state("|0,{P:H},0,0>"); }

std::string detection_label(int mode) {
  switch (mode) {
    case 0: return "11";
    case 1: return "10";
    case 2: return "01";
    case 3: return "00";
  }
  throw OutOfRange("detector mode " + std::to_string(mode));
}

GroverResult run_grover(GroverTarget target, OracleVariant variant, std::uint64_t shots,
                        std::uint64_t seed) {
  GroverResult r;
  r.output = evolve(grover_circuit(target, variant), StateVector(grover_input()));
  const Distribution d = probabilities(r.output);
  auto label_index = [](int mode) { return 3 - mode; };
  for (const auto& [s, p] : d) {
    for (int m = 0; m < 4; ++m) {
      if (s.mode_count(m) == 1) r.probabilities[label_index(m)] += p;
    }
  }
  for (const auto& [s, n] : sample(d, shots, seed)) {
    for (int m = 0; m < 4; ++m) {
      if (s.mode_count(m) == 1) r.counts[detection_label(m)] += n;
    }
  }
  return r;
}

GateBuild dual_rail_grover_3q_program(bool with_oracle) {
  constexpr int q = 3;
  auto g = [](Gate gate, int qubit) { return single_qubit_gate(gate, qubit, q); };
  GateBuild p = g(Gate::X, 2);
  for (int k = 0; k < 3; ++k) p = then(p, g(Gate::H, k));
  if (with_oracle) {
    p = then(p, g(Gate::X, 0));
    p = then(p, toffoli_decomposed(0, 1, 2, q));
    p = then(p, g(Gate::X, 0));
  }
  const GateBuild diffusion[] = {
      g(Gate::H, 0), g(Gate::H, 1), g(Gate::X, 0), g(Gate::X, 1), g(Gate::H, 1),
      heralded_cnot(0, 1, q),
      g(Gate::H, 1), g(Gate::X, 0), g(Gate::X, 1), g(Gate::H, 0), g(Gate::H, 1),
  };
  for (const auto& step : diffusion) p = then(p, step);
  return p;
}

DualRailGroverResult dual_rail_grover_3q(std::uint64_t seed, std::uint64_t shots,
                                         bool with_oracle) {
  const GateBuild program = dual_rail_grover_3q_program(with_oracle);
  SimulationOptions options;
  options.permanent_cap = 20;
  Processor proc(program.circuit, StateVector(program.input({0, 0, 0})), program.condition);
  const RunResult run_result = run(proc, options);

  DualRailGroverResult r;
  r.success_probability = run_result.success_probability;
  const StateVector conditioned = run_result.conditioned_state();
  Distribution label_dist;
  for (const auto& [s, a] : conditioned.terms()) {
    auto bits = decode_dual_rail(s, 3);
    if (!bits) continue;
    const std::string label = bits_to_string(*bits);
    r.amplitudes[label] += a;
    r.probabilities[label] += std::norm(a);
    r.marginal[label.substr(0, 2)] += std::norm(a);
    label_dist[s] += run_result.conditioned.at(s);
  }
  for (const auto& [s, n] : sample(label_dist, shots, seed)) {
    r.counts[bits_to_string(*decode_dual_rail(s, 3))] += n;
  }
  return r;
}

}  // namespace photonsim
