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

#ifndef PHOTONSIM_FOCK_HPP
#define PHOTONSIM_FOCK_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "photonsim/linalg.hpp"

namespace photonsim {

enum class Polarization : std::uint8_t { H = 0, V = 1 };

// A polarized register stores two channels per spatial mode, H at 2m and V at
// 2m+1. Unpolarized registers have one channel per spatial mode.
inline int channel_index(int spatial_mode, Polarization p) {
  return 2 * spatial_mode + static_cast<int>(p);
}

class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<int> occupations, bool polarized = false);

  static FockState vacuum(int channels, bool polarized = false);

  int channels() const { return static_cast<int>(occ_.size()); }
  int modes() const { return polarized_ ? channels() / 2 : channels(); }
  bool polarized() const { return polarized_; }
  int photons() const;

  int operator[](int channel) const { return occ_[channel]; }
  // Photons in a spatial mode, summed over polarization.
  int mode_count(int mode) const;
  const std::vector<int>& occupations() const { return occ_; }

  FockState with(int channel, int count) const;

  auto operator<=>(const FockState&) const = default;
  bool operator==(const FockState&) const = default;

 private:
  std::vector<int> occ_;
  bool polarized_ = false;
};

// Sparse superposition over Fock basis states of a fixed register, kept in
// lexicographic order of the occupation vectors. The zero vector is legal.
class StateVector {
 public:
  using Terms = std::map<FockState, Complex>;

  StateVector() = default;
  StateVector(int channels, bool polarized);
  StateVector(const FockState& basis, Complex amplitude = 1.0);

  int channels() const { return channels_; }
  int modes() const { return polarized_ ? channels_ / 2 : channels_; }
  bool polarized() const { return polarized_; }

  void add(const FockState& state, Complex amplitude);
  Complex amplitude(const FockState& state) const;
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  double norm_squared() const;
  // Photon number shared by every term; nullopt for the zero vector.
  // Throws MixedSector when terms disagree.
  std::optional<int> photon_sector() const;
  bool mixed_sector() const;

  StateVector& prune(double tol = kPruneTolerance);
  StateVector normalized() const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator*=(Complex factor);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator*(Complex f, StateVector a) { return a *= f; }

 private:
  void check_register(const FockState& state) const;

  int channels_ = 0;
  bool polarized_ = false;
  Terms terms_;
};

StateVector apply_creation(const StateVector& state, int channel);
StateVector apply_annihilation(const StateVector& state, int channel);

// <a|b>, antilinear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

// Product of creation operators with a coefficient; channels may repeat.
struct CreationMonomial {
  Complex coefficient = 1.0;
  std::vector<int> channels;
};

// Input state written as a polynomial in creation operators after every input
// operator is replaced by its image under u (a_i^+ -> sum_j u(j,i) a_j^+).
std::vector<CreationMonomial> transformed_polynomial(const Matrix& u, const FockState& input);

// Applies the monomials to the vacuum of a register.
StateVector apply_to_vacuum(const std::vector<CreationMonomial>& poly, int channels,
                            bool polarized);

// Reference evolution by explicit creation-operator expansion. Exponential in
// photon number; meant for cross-checking the permanent path on small inputs.
StateVector oracle_evolve(const Matrix& u, const StateVector& input);
StateVector oracle_evolve(const Matrix& u, const FockState& input);

}  // namespace photonsim

#endif  // PHOTONSIM_FOCK_HPP
