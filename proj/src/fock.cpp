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

#include "photonsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "photonsim/errors.hpp"

namespace photonsim {

FockState::FockState(std::vector<int> occupations, bool polarized)
    : occ_(std::move(occupations)), polarized_(polarized) {
  for (int n : occ_) {
    if (n < 0) throw InvalidOccupation("negative occupation " + std::to_string(n));
  }
  if (polarized_ && occ_.size() % 2 != 0) {
    throw InvalidOccupation("polarized register needs an even channel count");
  }
}

FockState FockState::vacuum(int channels, bool polarized) {
  return FockState(std::vector<int>(channels, 0), polarized);
}

int FockState::photons() const { return std::accumulate(occ_.begin(), occ_.end(), 0); }

int FockState::mode_count(int mode) const {
  if (!polarized_) return occ_[mode];
  return occ_[2 * mode] + occ_[2 * mode + 1];
}

FockState FockState::with(int channel, int count) const {
  FockState out = *this;
  if (count < 0) throw InvalidOccupation("negative occupation " + std::to_string(count));
  out.occ_.at(channel) = count;
  return out;
}

StateVector::StateVector(int channels, bool polarized)
    : channels_(channels), polarized_(polarized) {
  if (channels < 0 || (polarized && channels % 2 != 0)) {
    throw InvalidOccupation("bad register size " + std::to_string(channels));
  }
}

StateVector::StateVector(const FockState& basis, Complex amplitude)
    : channels_(basis.channels()), polarized_(basis.polarized()) {
  add(basis, amplitude);
}

void StateVector::check_register(const FockState& state) const {
  if (state.channels() != channels_ || state.polarized() != polarized_) {
    throw RegisterMismatch("state does not belong to this register");
  }
}

void StateVector::add(const FockState& state, Complex amplitude) {
  check_register(state);
  terms_[state] += amplitude;
}

Complex StateVector::amplitude(const FockState& state) const {
  check_register(state);
  auto it = terms_.find(state);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [s, a] : terms_) total += std::norm(a);
  return total;
}

bool StateVector::mixed_sector() const {
  if (terms_.empty()) return false;
  int n = terms_.begin()->first.photons();
  return std::any_of(terms_.begin(), terms_.end(),
                     [n](const auto& t) { return t.first.photons() != n; });
}

std::optional<int> StateVector::photon_sector() const {
  if (terms_.empty()) return std::nullopt;
  if (mixed_sector()) throw MixedSector("superposition mixes photon numbers");
  return terms_.begin()->first.photons();
}

StateVector& StateVector::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& t) { return std::abs(t.second) < tol; });
  return *this;
}

StateVector StateVector::normalized() const {
  double n = std::sqrt(norm_squared());
  StateVector out = *this;
  if (n > 0.0) out *= 1.0 / n;
  return out;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  if (other.channels_ != channels_ || other.polarized_ != polarized_) {
    throw RegisterMismatch("cannot add states of different registers");
  }
  for (const auto& [s, a] : other.terms_) terms_[s] += a;
  return *this;
}

StateVector& StateVector::operator*=(Complex factor) {
  for (auto& [s, a] : terms_) a *= factor;
  return *this;
}

StateVector apply_creation(const StateVector& state, int channel) {
  if (channel < 0 || channel >= state.channels()) {
    throw OutOfRange("channel " + std::to_string(channel) + " outside register");
  }
  StateVector out(state.channels(), state.polarized());
  for (const auto& [s, a] : state.terms()) {
    int n = s[channel];
    out.add(s.with(channel, n + 1), a * std::sqrt(static_cast<double>(n + 1)));
  }
  return out;
}

StateVector apply_annihilation(const StateVector& state, int channel) {
  if (channel < 0 || channel >= state.channels()) {
    throw OutOfRange("channel " + std::to_string(channel) + " outside register");
  }
  StateVector out(state.channels(), state.polarized());
  for (const auto& [s, a] : state.terms()) {
    int n = s[channel];
    if (n == 0) continue;
    out.add(s.with(channel, n - 1), a * std::sqrt(static_cast<double>(n)));
  }
  return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.channels() != b.channels() || a.polarized() != b.polarized()) {
    throw RegisterMismatch("inner product across registers");
  }
  Complex total = 0.0;
  for (const auto& [s, amp] : a.terms()) {
    auto it = b.terms().find(s);
    if (it != b.terms().end()) total += std::conj(amp) * it->second;
  }
  return total;
}

std::vector<CreationMonomial> transformed_polynomial(const Matrix& u, const FockState& input) {
  if (u.rows() != input.channels() || u.cols() != input.channels()) {
    throw RegisterMismatch("matrix size does not match register");
  }
  // |s> = prod_i (a_i^+)^{s_i} / sqrt(s_i!) |0>.
  double norm = 1.0;
  for (int n : input.occupations()) norm *= std::tgamma(n + 1.0);

  std::map<std::vector<int>, Complex> poly;
  poly[{}] = 1.0 / std::sqrt(norm);
  for (int i = 0; i < input.channels(); ++i) {
    for (int k = 0; k < input[i]; ++k) {
      std::map<std::vector<int>, Complex> next;
      for (const auto& [factors, c] : poly) {
        for (int j = 0; j < u.rows(); ++j) {
          if (u(j, i) == Complex(0.0)) continue;
          std::vector<int> f = factors;
          f.insert(std::upper_bound(f.begin(), f.end(), j), j);
          next[f] += c * u(j, i);
        }
      }
      poly = std::move(next);
    }
  }
  std::vector<CreationMonomial> out;
  out.reserve(poly.size());
  for (auto& [factors, c] : poly) out.push_back({c, factors});
  return out;
}

StateVector apply_to_vacuum(const std::vector<CreationMonomial>& poly, int channels,
                            bool polarized) {
  StateVector out(channels, polarized);
  for (const auto& m : poly) {
    StateVector term(FockState::vacuum(channels, polarized), m.coefficient);
    for (int c : m.channels) term = apply_creation(term, c);
    out += term;
  }
  return out;
}

StateVector oracle_evolve(const Matrix& u, const StateVector& input) {
  if (!is_unitary(u)) throw NotUnitary("oracle_evolve needs a unitary matrix");
  if (u.rows() != input.channels()) throw RegisterMismatch("matrix size does not match register");
  StateVector out(input.channels(), input.polarized());
  for (const auto& [s, a] : input.terms()) {
    StateVector part = apply_to_vacuum(transformed_polynomial(u, s), s.channels(), s.polarized());
    out += a * part;
  }
  return out.prune();
}

StateVector oracle_evolve(const Matrix& u, const FockState& input) {
  return oracle_evolve(u, StateVector(input));
}

}  // namespace photonsim
