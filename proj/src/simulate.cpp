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

#include "photonsim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace photonsim {
namespace {

double factorial_product(const FockState& s) {
  double p = 1.0;
  for (int n : s.occupations()) {
    for (int k = 2; k <= n; ++k) p *= k;
  }
  return p;
}

std::vector<int> repeated_indices(const FockState& s) {
  std::vector<int> idx;
  for (int i = 0; i < s.channels(); ++i) {
    for (int k = 0; k < s[i]; ++k) idx.push_back(i);
  }
  return idx;
}

void visit_rec(std::vector<int>& occ, int pos, int left, bool polarized,
               const std::function<void(const FockState&)>& visit) {
  const int last = static_cast<int>(occ.size()) - 1;
  if (pos == last) {
    occ[pos] = left;
    visit(FockState(occ, polarized));
    occ[pos] = 0;
    return;
  }
  for (int n = 0; n <= left; ++n) {
    occ[pos] = n;
    visit_rec(occ, pos + 1, left - n, polarized, visit);
  }
  occ[pos] = 0;
}

}  // namespace

Complex amplitude(const Matrix& u, const FockState& in, const FockState& out,
                  const SimulationOptions& options) {
  if (u.rows() != in.channels() || u.cols() != in.channels() || out.channels() != in.channels()) {
    throw RegisterMismatch("matrix and states disagree on register size");
  }
  if (in.photons() != out.photons()) return 0.0;
  const std::vector<int> cols = repeated_indices(in);
  const std::vector<int> rows = repeated_indices(out);
  Matrix sub = u(rows, cols);
  return permanent(sub, options.permanent_cap) /
         std::sqrt(factorial_product(in) * factorial_product(out));
}

void for_each_state(int channels, bool polarized, int photons,
                    const std::function<void(const FockState&)>& visit) {
  if (channels <= 0) return;
  std::vector<int> occ(channels, 0);
  visit_rec(occ, 0, photons, polarized, visit);
}

std::uint64_t sector_size(int channels, int photons) {
  // C(photons + channels - 1, photons), saturating.
  long double r = 1;
  for (int k = 1; k <= photons; ++k) {
    r = r * (channels - 1 + k) / k;
    if (r > 1e18L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(std::llround(r));
}

StateVector evolve(const Matrix& u, const StateVector& input, const SimulationOptions& options) {
  if (u.rows() != input.channels()) throw RegisterMismatch("matrix size does not match register");
  StateVector out(input.channels(), input.polarized());
  const std::optional<int> sector = input.photon_sector();
  if (!sector) return out;
  const int n = *sector;
  {
    if (n > options.permanent_cap) {
      throw TooLarge(std::to_string(n) + " photons exceed permanent cap " +
                     std::to_string(options.permanent_cap));
    }
    if (sector_size(input.channels(), n) > options.max_outputs) {
      throw TooLarge("output sector too large to enumerate");
    }
    for_each_state(input.channels(), input.polarized(), n, [&](const FockState& t) {
      Complex total = 0.0;
      for (const auto& [s, a] : input.terms()) total += a * amplitude(u, s, t, options);
      if (std::abs(total) >= kPruneTolerance) out.add(t, total);
    });
  }
  return out;
}

StateVector evolve(const Circuit& circuit, const StateVector& input,
                   const SimulationOptions& options) {
  if (circuit.channels() != input.channels() || circuit.polarized() != input.polarized()) {
    throw RegisterMismatch("input state does not match the circuit register");
  }
  return evolve(compile(circuit), input, options);
}

Distribution probabilities(const StateVector& state) {
  Distribution d;
  for (const auto& [s, a] : state.terms()) {
    double p = std::norm(a);
    if (p > 0.0) d[s] = p;
  }
  return d;
}

Distribution distribution(const Circuit& circuit, const StateVector& input,
                          const SimulationOptions& options) {
  return probabilities(evolve(circuit, input, options));
}

double total_probability(const Distribution& d) {
  double t = 0.0;
  for (const auto& [s, p] : d) t += p;
  return t;
}

SampleCounts sample(const Distribution& d, std::uint64_t shots, std::uint64_t seed) {
  SampleCounts counts;
  if (shots == 0 || d.empty()) return counts;
  std::vector<const FockState*> outcomes;
  std::vector<double> cdf;
  double acc = 0.0;
  for (const auto& [s, p] : d) {
    if (p <= 0.0) continue;
    acc += p;
    outcomes.push_back(&s);
    cdf.push_back(acc);
  }
  if (outcomes.empty()) return counts;
  SplitMix64 rng(seed);
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double r = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
    std::size_t i = std::min<std::size_t>(it - cdf.begin(), outcomes.size() - 1);
    ++counts[*outcomes[i]];
  }
  return counts;
}

}  // namespace photonsim
