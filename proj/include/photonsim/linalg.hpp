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

#ifndef PHOTONSIM_LINALG_HPP
#define PHOTONSIM_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

namespace photonsim {

template <typename Scalar>
using MatrixXc = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
using Matrix4c = Eigen::Matrix<std::complex<Scalar>, 4, 4>;

using Complex = std::complex<double>;
using Matrix = MatrixXc<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Amplitudes below this magnitude are dropped from sparse states.
inline constexpr double kPruneTolerance = 1e-12;

inline constexpr double kUnitaryTolerance = 1e-9;

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = kUnitaryTolerance) {
  if (u.rows() != u.cols()) return false;
  if (u.rows() == 0) return true;
  auto gram = (u.adjoint() * u).eval();
  gram -= decltype(gram)::Identity(u.rows(), u.cols());
  return gram.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace photonsim

#endif  // PHOTONSIM_LINALG_HPP
