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


// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "photonsim/errors.hpp"
#include "photonsim/grover.hpp"
#include "photonsim/postselect.hpp"
#include "photonsim/qubit.hpp"
#include "photonsim/state_string.hpp"
#include "test_util.hpp"

namespace photonsim {
namespace {

using testing::kI;
using testing::kInvSqrt2;
using testing::max_abs;
using testing::state_distance;

constexpr double kAmpTol = 1e-9;
constexpr double kExactTol = 1e-12;

// Tracks the worst error seen and every failed sub-check of one criterion.
class Criterion {
 public:
  void close(const std::string& what, double err, double tol) {
    worst_ = std::max(worst_, err / tol);
    if (!(err <= tol)) fail(what + " err=" + fmt(err) + " tol=" + fmt(tol));
  }
  void require(const std::string& what, bool ok) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (failures_.empty()) first_ = what;
    failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (ok()) return "worst error/tolerance " + fmt(worst_);
    return std::to_string(failures_.size()) + " failed check(s), first: " + first_;
  }

 private:
  static std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }
  double worst_ = 0.0;
  std::vector<std::string> failures_;
  std::string first_;
};

std::vector<int> bits_of(int value, int q) {
  std::vector<int> b(q);
  for (int i = 0; i < q; ++i) b[i] = (value >> (q - 1 - i)) & 1;
  return b;
}

std::map<std::string, Complex> data_amplitudes(const StateVector& s, int qubits) {
  std::map<std::string, Complex> out;
  for (const auto& [state, a] : s.terms()) {
    auto bits = decode_dual_rail(state, qubits);
    out[bits ? bits_to_string(*bits) : "-"] += a;
  }
  return out;
}

// Compares the data-qubit amplitudes of a state with an expected table; labels
// missing from `want` must be absent.
void expect_data(Criterion& c, const std::string& what, const StateVector& s, int qubits,
                 const std::map<std::string, Complex>& want) {
  auto got = data_amplitudes(s, qubits);
  for (const auto& [label, a] : got) {
    if (!want.count(label)) c.close(what + " stray " + label, std::abs(a), kAmpTol);
  }
  for (const auto& [label, a] : want) c.close(what + " " + label, std::abs(got[label] - a), kAmpTol);
}

Criterion gate_catalog() {
  Criterion c;
  auto apply = [](const GateBuild& g, const std::vector<int>& bits) {
    return evolve(g.circuit, StateVector(g.input(bits)));
  };
  auto one = [](Gate g, double t = 0.0) { return single_qubit_gate(g, 0, 2, t); };
  const double r = 0.7071067811865476;
  expect_data(c, "X0|10>", apply(one(Gate::X), {1, 0}), 2, {{"00", 1.0}});
  expect_data(c, "X0|11>", apply(one(Gate::X), {1, 1}), 2, {{"01", 1.0}});
  expect_data(c, "SWAP|10>", apply(swap_gate(0, 1, 2), {1, 0}), 2, {{"01", 1.0}});
  expect_data(c, "H0|00>", apply(one(Gate::H), {0, 0}), 2, {{"00", r}, {"10", r}});
  expect_data(c, "Z0|11>", apply(one(Gate::Z), {1, 1}), 2, {{"11", -1.0}});
  expect_data(c, "Y0|10>", apply(one(Gate::Y), {1, 0}), 2, {{"00", -kI}});
  expect_data(c, "RX|10>", apply(one(Gate::RX, kPi / 2), {1, 0}), 2,
              {{"00", -kI * kInvSqrt2}, {"10", kInvSqrt2}});
  expect_data(c, "RY|10>", apply(one(Gate::RY, kPi / 2), {1, 0}), 2,
              {{"00", -kInvSqrt2}, {"10", kInvSqrt2}});
  expect_data(c, "RZ|10>", apply(one(Gate::RZ, kPi / 2), {1, 0}), 2,
              {{"10", Complex(kInvSqrt2, kInvSqrt2)}});
  return c;
}

RunResult run_build(const GateBuild& g, const StateVector& in) {
  return run(Processor(g.circuit, in, g.condition));
}

void cnot_truth_table(Criterion& c, const GateBuild& g, const std::string& name, double success) {
  for (int v = 0; v < 4; ++v) {
    const auto bits = bits_of(v, 2);
    RunResult r = run_build(g, StateVector(g.input(bits)));
    auto want = bits;
    want[1] ^= want[0];
    const std::string label = bits_to_string(want);
    c.close(name + " success " + bits_to_string(bits), std::abs(r.success_probability - success),
            kAmpTol);
    double on_image = 0.0;
    for (const auto& [s, p] : r.conditioned) {
      auto b = decode_dual_rail(s, 2);
      if (b && bits_to_string(*b) == label) on_image += p;
    }
    c.close(name + " image of " + bits_to_string(bits), std::abs(on_image - 1.0), kAmpTol);
  }
}

Criterion ralph_cnot_criterion() {
  Criterion c;
  cnot_truth_table(c, ralph_cnot(0, 1, 2), "ralph", 1.0 / 9.0);
  // Each input mode's spread over the outputs: (ancilla_c, c0, c1, t0, t1, ancilla_t).
  const double a = 1 / std::sqrt(3.0), b = std::sqrt(2.0 / 3.0);
  const double want[6][6] = {
      {a, b, 0, 0, 0, 0}, {b, a, 0, 0, 0, 0}, {0, 0, a, a, a, 0},
      {0, 0, a, a, 0, a}, {0, 0, a, 0, a, a}, {0, 0, 0, a, a, a},
  };
  const Matrix u = compile(ralph_cnot_core());
  for (int in = 0; in < 6; ++in) {
    double err = 0.0;
    for (int out = 0; out < 6; ++out) err = std::max(err, std::abs(std::abs(u(out, in)) - want[in][out]));
    c.close("mode relation for input " + std::to_string(in), err, kAmpTol);
  }
  return c;
}

Criterion heralded_cnot_criterion() {
  Criterion c;
  cnot_truth_table(c, heralded_cnot(0, 1, 2), "heralded", 2.0 / 27.0);
  GateBuild bell = then(single_qubit_gate(Gate::H, 0, 2), heralded_cnot(0, 1, 2));
  RunResult r = run_build(bell, StateVector(bell.input({0, 0})));
  c.close("bell success", std::abs(r.success_probability - 2.0 / 27.0), kAmpTol);
  expect_data(c, "bell", r.conditioned_state(), 2, {{"00", kInvSqrt2}, {"11", kInvSqrt2}});
  return c;
}

Criterion toffoli_criterion() {
  Criterion c;
  GateBuild g = toffoli_decomposed(0, 1, 2, 3);
  const double success = std::pow(2.0 / 27.0, 6);
  std::optional<Complex> phase;
  for (int v = 0; v < 8; ++v) {
    const auto bits = bits_of(v, 3);
    RunResult r = run_build(g, StateVector(g.input(bits)));
    c.close("success " + bits_to_string(bits), std::abs(r.success_probability - success), kAmpTol);
    auto want = bits;
    want[2] ^= bits[0] & bits[1];
    auto amps = data_amplitudes(r.conditioned_state(), 3);
    const Complex a = amps[bits_to_string(want)];
    c.close("row " + bits_to_string(bits), std::abs(std::abs(a) - 1.0), kAmpTol);
    c.require("row " + bits_to_string(bits) + " single outcome", amps.size() == 1);
    if (!phase) phase = a;
    c.close("row phase " + bits_to_string(bits), std::abs(a - *phase), kAmpTol);
    if (bits_to_string(bits) == "110") c.require("CCX|110>=|111>", bits_to_string(want) == "111");
  }
  return c;
}

Criterion polarization_grover_criterion() {
  Criterion c;
  const GroverTarget targets[] = {GroverTarget::T00, GroverTarget::T01, GroverTarget::T10,
                                  GroverTarget::T11};
  for (GroverTarget t : targets) {
    for (OracleVariant v : {OracleVariant::PerModeRotator, OracleVariant::UniformRotator}) {
      GroverResult r = run_grover(t, v);
      const std::string name = std::string(to_string(t)) + "/" + std::string(to_string(v));
      for (int k = 0; k < 4; ++k) {
        const double want = k == static_cast<int>(t) ? 1.0 : 0.0;
        c.close(name + " label " + kGroverLabels[k], std::abs(r.probabilities[k] - want), kAmpTol);
      }
    }
  }
  // Checkpoints replayed through the creation-operator expansion.
  auto step = [](const Circuit& circ, StateVector s) { return oracle_evolve(compile(circ), s); };
  StateVector psi1 = step(grover_init(), StateVector(parse_state("|0,1:H>")));
  for (const char* ket : {"|1:V,0>", "|0,1:H>", "|1:H,0>", "|0,1:V>"}) {
    c.close(std::string("psi1 ") + ket, std::abs(psi1.amplitude(parse_state(ket)) - 0.5), kAmpTol);
  }
  StateVector psi2 = step(grover_oracle(GroverTarget::T11, OracleVariant::PerModeRotator), psi1);
  StateVector want2(4, true);
  want2.add(parse_state("|1:V,0>"), -0.5);
  want2.add(parse_state("|0,1:H>"), 0.5);
  want2.add(parse_state("|1:H,0>"), 0.5);
  want2.add(parse_state("|0,1:V>"), 0.5);
  c.close("psi2", state_distance(psi2, want2), kAmpTol);
  StateVector psi6 = step(grover_inversion(), psi2);
  c.close("psi6", state_distance(psi6, StateVector(parse_state("|1:V,0>"), -1.0)), kAmpTol);
  return c;
}

Criterion dual_rail_grover_criterion() {
  Criterion c;
  DualRailGroverResult r = dual_rail_grover_3q(1, 1000);
  c.require("heralds can succeed", r.success_probability > 0.0);
  c.close("marginal 01", std::abs(r.marginal["01"] - 1.0), kAmpTol);
  // -|01> (x) |->: the sign shows on the ancilla-0 branch.
  c.close("amplitude 010", std::abs(r.amplitudes["010"] + kInvSqrt2), kAmpTol);
  c.close("amplitude 011", std::abs(r.amplitudes["011"] - kInvSqrt2), kAmpTol);
  c.require("samples all on 01", r.counts.size() <= 2 && r.counts.count("010") + r.counts.count("011") == r.counts.size());
  return c;
}

Matrix M2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Criterion property_suites() {
  Criterion c;
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);

  // Unitarity and continuity on random draws.
  for (int k = 0; k < 1000; ++k) {
    BeamSplitterSpec<> s;
    s.convention = static_cast<BsConvention>(k % 6);
    s.theta = angle(rng);
    s.phi_tl = angle(rng);
    s.phi_bl = angle(rng);
    s.phi_tr = angle(rng);
    s.phi_br = angle(rng);
    s.phi_r = angle(rng);
    s.phi_t = angle(rng);
    s.phi_0 = angle(rng);
    const Matrix m = local_matrix(s);
    c.close("bs unitarity", testing::unitarity_defect(m), kExactTol);
    c.close("continuity a", std::abs(std::norm(m(0, 0)) + std::norm(m(1, 0)) - 1.0), kExactTol);
    c.close("continuity b", std::abs(std::norm(m(1, 1)) + std::norm(m(0, 1)) - 1.0), kExactTol);
    c.close("continuity c", std::abs(m(1, 0) * std::conj(m(1, 1)) + m(0, 0) * std::conj(m(0, 1))),
            kExactTol);
    const Component others[] = {PhaseShifterSpec<>{angle(rng)},
                                WavePlateSpec<>{angle(rng), angle(rng)},
                                PolarizationRotatorSpec<>{angle(rng)}};
    for (const auto& o : others) c.close("unitarity", testing::unitarity_defect(local_matrix(o)), kExactTol);
  }

  // Convention identities.
  const Matrix h = kInvSqrt2 * M2(1, 1, 1, -1);
  auto bs = [](BsConvention conv, double theta) {
    BeamSplitterSpec<> s;
    s.convention = conv;
    s.theta = theta;
    return s;
  };
  c.close("BS1(pi/4)=H", max_abs(local_matrix(bs(BsConvention::BS1, kPi / 4)) - h), kExactTol);
  BeamSplitterSpec<> b1 = bs(BsConvention::BS1, kPi / 4);
  b1.phi_r = -kPi / 2;
  b1.phi_0 = kPi / 2;
  c.close("BS1 phased", max_abs(local_matrix(b1) - kInvSqrt2 * M2(1, kI, kI, 1)), kExactTol);
  c.close("BS3(pi/2)=H", max_abs(local_matrix(bs(BsConvention::BS3, kPi / 2)) - h), kExactTol);
  c.close("BS_H(pi/2)=H", max_abs(local_matrix(bs(BsConvention::H, kPi / 2)) - h), kExactTol);

  // Composition identities on a single qubit.
  auto ps0 = [](double phi) {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 0) = std::exp(kI * phi);
    return m;
  };
  for (int k = 0; k < 100; ++k) {
    const double t = angle(rng);
    const double cs = std::cos(t / 2), sn = std::sin(t / 2);
    const Matrix rx = M2(cs, -kI * sn, -kI * sn, cs);
    const Matrix rz = M2(std::exp(-kI * (t / 2)), 0, 0, std::exp(kI * (t / 2)));
    const Matrix bsrx = local_matrix(bs(BsConvention::Rx, t));
    c.close("RX identity", max_abs(ps0(kPi) * bsrx * ps0(kPi) - rx), kExactTol);
    c.close("RZ identity", max_abs(h * ps0(kPi) * bsrx * ps0(kPi) * h - rz), kExactTol);
    c.close("RX build", max_abs(compile(single_qubit_gate(Gate::RX, 0, 1, t).circuit) - rx),
            kExactTol);
    c.close("RZ build", max_abs(compile(single_qubit_gate(Gate::RZ, 0, 1, t).circuit) - rz),
            kExactTol);
  }
  Matrix ps1h = Matrix::Identity(2, 2);
  ps1h(1, 1) = kI;
  const Matrix y = M2(0, -kI, kI, 0);
  const Matrix perm10 = M2(0, 1, 1, 0);
  c.close("Y identity", max_abs(ps1h * ps0(-kPi / 2) * perm10 - y), kExactTol);
  c.close("PR(pi/2)=iY", max_abs(local_matrix(PolarizationRotatorSpec<>{kPi / 2}) - kI * y),
          kExactTol);
  const Matrix x = M2(0, 1, 1, 0), z = M2(1, 0, 0, -1), id = Matrix::Identity(2, 2);
  for (int k = 0; k < 100; ++k) {
    const double d = angle(rng), xi = angle(rng);
    c.close("WP decomposition",
            max_abs(local_matrix(WavePlateSpec<>{d, xi}) -
                    (std::cos(d) * id + kI * std::sin(d) * (std::cos(2 * xi) * z + std::sin(2 * xi) * x))),
            kExactTol);
    c.close("HWP decomposition",
            max_abs(local_matrix(half_wave_plate(xi)) -
                    kI * (std::cos(2 * xi) * z + std::sin(2 * xi) * x)),
            kExactTol);
  }

  // Permanent-based evolution against the creation-operator expansion.
  std::uniform_int_distribution<int> modes_dist(2, 5), photons_dist(1, 3);
  for (int k = 0; k < 50; ++k) {
    const int m = modes_dist(rng), n = photons_dist(rng);
    std::vector<int> occ(m, 0);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int i = 0; i < n; ++i) ++occ[pick(rng)];
    const Matrix u = testing::random_unitary(m, rng);
    const StateVector in{FockState(occ)};
    c.close("oracle equivalence", state_distance(evolve(u, in), oracle_evolve(u, in)), kAmpTol);
  }

  // Permanent against the permutation sum, and the HOM zero.
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < 5; ++k) {
      const Matrix a = testing::random_matrix(n, rng);
      const Complex want = testing::naive_permanent(a);
      c.close("permanent n=" + std::to_string(n), std::abs(permanent(a) - want) / std::abs(want),
              kAmpTol);
    }
  }
  c.close("HOM", std::abs(amplitude(local_matrix(BeamSplitterSpec<>{}), FockState({1, 1}),
                                    FockState({1, 1}))),
          kExactTol);

  // Parsers: round trips over the listing strings and error offsets.
  for (const char* text : {"[0,1]==1 & [2,3]==1 & [4]==0 & [5]==0", "[4]==1 & [5]==1",
                           "[0,1]==1 & [4]==0"}) {
    const PostSelect p = parse_postselect(text);
    const std::string once = to_string(p);
    c.require(std::string("postselect round trip ") + text,
              parse_postselect(once) == p && to_string(parse_postselect(once)) == once);
  }
  for (const char* text : {"|0,1,0,1,0,0>", "|0,{P:H},0,0>", "|1:V,0>", "|1,0,1,0>", "|0,1,1,0>",
                           "|0,1,0,1,1,1>"}) {
    const FockState s = parse_state(text);
    const std::string once = print_state(s);
    c.require(std::string("state round trip ") + text,
              parse_state(once) == s && print_state(parse_state(once)) == once);
  }
  auto offset = [](const std::function<void()>& f) -> long {
    try {
      f();
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  c.require("postselect offset", offset([] { parse_postselect("[0,1==1"); }) == 4);
  c.require("state offset", offset([] { parse_state("|0,x>"); }) == 3);
  c.require("state offset at end", offset([] { parse_state("|0,1"); }) == 4);
  return c;
}

Criterion sampling_criterion() {
  Criterion c;
  Distribution coin;
  coin[FockState({1, 0})] = 0.5;
  coin[FockState({0, 1})] = 0.5;
  c.require("same seed, same counts", sample(coin, 100000, 77) == sample(coin, 100000, 77));
  const SampleCounts counts = sample(coin, 100000, 77);
  for (const auto& [s, n] : counts) {
    c.close("five sigma", std::abs(static_cast<double>(n) - 50000.0), 5.0 * std::sqrt(25000.0));
  }
  c.require("two outcomes", counts.size() == 2);
  return c;
}

}  // namespace
}  // namespace photonsim

int main() {
  using namespace photonsim;
  struct Entry {
    const char* name;
    Criterion (*run)();
  };
  const Entry entries[] = {
      {"gate catalog golden tests", gate_catalog},
      {"post-selected CNOT", ralph_cnot_criterion},
      {"heralded CNOT", heralded_cnot_criterion},
      {"CCX via decomposition", toffoli_criterion},
      {"polarization Grover", polarization_grover_criterion},
      {"dual-rail 3-qubit Grover", dual_rail_grover_criterion},
      {"property suites", property_suites},
      {"sampling determinism", sampling_criterion},
  };
  int failed = 0;
  int index = 0;
  for (const auto& e : entries) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.fail(std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%s, %.2fs)\n", c.ok() ? "PASS" : "FAIL", index, e.name,
                c.summary().c_str(), secs);
    std::fflush(stdout);
    if (!c.ok()) ++failed;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
