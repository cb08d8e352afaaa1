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

#ifndef PHOTONSIM_SIMULATE_HPP
#define PHOTONSIM_SIMULATE_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "photonsim/circuit.hpp"
#include "photonsim/errors.hpp"
#include "photonsim/fock.hpp"

namespace photonsim {

inline constexpr int kDefaultPermanentCap = 16;

struct SimulationOptions {
  // Largest permanent (photon number) evaluated before TooLarge is thrown.
  int permanent_cap = kDefaultPermanentCap;
  // Largest number of output basis states a full evolution may enumerate.
  std::uint64_t max_outputs = 20'000'000;
};

// Ryser's formula with Gray-code subset order, O(2^n n). Row sums are
// accumulated in long double; alternating sums over 2^15+ subsets lose too
// many digits in double.
template <typename Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& a,
                                   int cap = kDefaultPermanentCap) {
  using Out = typename Derived::Scalar;
  using Wide = std::complex<long double>;
  const auto n = a.rows();
  if (a.cols() != n) throw RegisterMismatch("permanent of a non-square matrix");
  if (n == 0) return Out(1);
  if (n > cap) {
    throw TooLarge("permanent of size " + std::to_string(n) + " exceeds cap " +
                   std::to_string(cap));
  }
  if (n == 1) return a(0, 0);

  Eigen::Matrix<Wide, Eigen::Dynamic, Eigen::Dynamic> w = a.template cast<Wide>();
  Eigen::Matrix<Wide, Eigen::Dynamic, 1> row_sum = Eigen::Matrix<Wide, Eigen::Dynamic, 1>::Zero(n);
  Wide total = 0;
  std::uint64_t gray = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int j = std::countr_zero(k);
    gray ^= std::uint64_t{1} << j;
    if (gray & (std::uint64_t{1} << j)) {
      row_sum += w.col(j);
    } else {
      row_sum -= w.col(j);
    }
    Wide prod = row_sum(0);
    for (Eigen::Index i = 1; i < n; ++i) prod *= row_sum(i);
    if (std::popcount(gray) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  if (n & 1) total = -total;
  return Out(static_cast<typename Out::value_type>(total.real()),
             static_cast<typename Out::value_type>(total.imag()));
}

// <out| U |in> for Fock basis states of the register U acts on.
Complex amplitude(const Matrix& u, const FockState& in, const FockState& out,
                  const SimulationOptions& options = {});

// Visits every Fock state of the register with the given photon number, in
// lexicographic order of occupation vectors.
void for_each_state(int channels, bool polarized, int photons,
                    const std::function<void(const FockState&)>& visit);

std::uint64_t sector_size(int channels, int photons);

// Full output state, amplitudes below kPruneTolerance dropped.
StateVector evolve(const Matrix& u, const StateVector& input,
                   const SimulationOptions& options = {});
StateVector evolve(const Circuit& circuit, const StateVector& input,
                   const SimulationOptions& options = {});

using Distribution = std::map<FockState, double>;
using SampleCounts = std::map<FockState, std::uint64_t>;

Distribution probabilities(const StateVector& state);
Distribution distribution(const Circuit& circuit, const StateVector& input,
                          const SimulationOptions& options = {});

double total_probability(const Distribution& d);

// splitmix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then two
// xor-shift-multiply rounds. uniform() takes the top 53 bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Inverse-CDF sampling over outcomes in lexicographic order; probabilities are
// renormalized by their total. Same seed, same counts.
SampleCounts sample(const Distribution& d, std::uint64_t shots, std::uint64_t seed);

}  // namespace photonsim

#endif  // PHOTONSIM_SIMULATE_HPP
