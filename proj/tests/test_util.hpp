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


#ifndef PHOTONSIM_TESTS_TEST_UTIL_HPP
#define PHOTONSIM_TESTS_TEST_UTIL_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "photonsim/fock.hpp"
#include "photonsim/linalg.hpp"

namespace photonsim::testing {

inline const Complex kI(0.0, 1.0);
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Haar-ish unitary: QR of a complex Gaussian matrix with the R phases removed.
inline Matrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix z(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) z(r, c) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

inline Matrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix z(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) z(r, c) = Complex(g(rng), g(rng));
  }
  return z;
}

// Sum over all permutations, no cleverness.
inline Complex naive_permanent(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Complex total = 0.0;
  do {
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= a(i, p[i]);
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Max-norm of the elementwise difference of two sparse states.
inline double state_distance(const StateVector& a, const StateVector& b) {
  double d = 0.0;
  for (const auto& [s, x] : a.terms()) d = std::max(d, std::abs(x - b.amplitude(s)));
  for (const auto& [s, x] : b.terms()) d = std::max(d, std::abs(x - a.amplitude(s)));
  return d;
}

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline double unitarity_defect(const Matrix& u) {
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

// Distance after removing the relative phase at the largest entry of a.
inline double distance_up_to_phase(const Matrix& a, const Matrix& b) {
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return max_abs(a - b);
  const Complex phase = a(r, c) / b(r, c);
  return max_abs(a - (phase / std::abs(phase)) * b);
}

}  // namespace photonsim::testing

#endif  // PHOTONSIM_TESTS_TEST_UTIL_HPP
