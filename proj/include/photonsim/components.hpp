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

#ifndef PHOTONSIM_COMPONENTS_HPP
#define PHOTONSIM_COMPONENTS_HPP

#include <cmath>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "photonsim/linalg.hpp"

namespace photonsim {

// Matrices follow the column convention: column i is the image of a photon
// entering local mode i, so a_i^+ -> sum_j U(j,i) a_j^+.

enum class BsConvention { BS1, BS2, BS3, H, Rx, Ry };

BsConvention parse_bs_convention(std::string_view name);
std::string_view to_string(BsConvention c);
bool uses_four_phases(BsConvention c);

template <typename Scalar = double>
struct BeamSplitterSpec {
  BsConvention convention = BsConvention::H;
  Scalar theta = Scalar(kPi / 2);
  // H, Rx, Ry.
  Scalar phi_tl = 0, phi_bl = 0, phi_tr = 0, phi_br = 0;
  // BS1, BS2, BS3.
  Scalar phi_r = 0, phi_t = 0, phi_0 = 0;
};

template <typename Scalar = double>
struct PhaseShifterSpec {
  Scalar phi = 0;
};

// target[i] is the output mode of a photon entering local mode i.
struct PermutationSpec {
  std::vector<int> target;
};

// Jones matrix cos(d) I + i sin(d) (cos(2x) Z + sin(2x) X) on (H, V).
template <typename Scalar = double>
struct WavePlateSpec {
  Scalar delta = 0;
  Scalar xi = 0;
};

template <typename Scalar = double>
struct PolarizationRotatorSpec {
  Scalar theta = 0;
};

// Transmits H, reflects V between two spatial modes.
struct PbsSpec {};

struct UnitarySpec {
  Matrix matrix;
};

using Component = std::variant<BeamSplitterSpec<>, PhaseShifterSpec<>, PermutationSpec,
                               WavePlateSpec<>, PolarizationRotatorSpec<>, PbsSpec, UnitarySpec>;

template <typename Scalar = double>
WavePlateSpec<Scalar> half_wave_plate(Scalar xi) {
  return {Scalar(kPi / 2), xi};
}

template <typename Scalar = double>
WavePlateSpec<Scalar> quarter_wave_plate(Scalar xi) {
  return {Scalar(kPi / 4), xi};
}

template <typename Scalar>
Matrix2c<Scalar> bs_matrix(const BeamSplitterSpec<Scalar>& s) {
  using C = std::complex<Scalar>;
  const C i(0, 1);
  auto e = [&](Scalar x) { return std::exp(i * x); };
  Matrix2c<Scalar> m;
  switch (s.convention) {
    case BsConvention::BS1: {
      Scalar sn = std::sin(s.theta), cs = std::cos(s.theta);
      m << sn * e(s.phi_r), cs * e(-s.phi_t),
           cs * e(s.phi_t), -sn * e(-s.phi_r);
      return e(s.phi_0) * m;
    }
    case BsConvention::BS2: {
      Scalar sn = std::sin(s.theta / 2), cs = std::cos(s.theta / 2);
      m << -sn * e(s.phi_r), cs * e(-s.phi_t),
           cs * e(s.phi_t), sn * e(-s.phi_r);
      return e(s.phi_0) * m;
    }
    case BsConvention::BS3: {
      Scalar sn = std::sin(s.theta / 2), cs = std::cos(s.theta / 2);
      m << cs * e(s.phi_r), sn * e(-s.phi_t),
           sn * e(s.phi_t), -cs * e(-s.phi_r);
      return e(s.phi_0) * m;
    }
    case BsConvention::H:
    case BsConvention::Rx:
    case BsConvention::Ry: {
      C cs = std::cos(s.theta / 2), sn = std::sin(s.theta / 2);
      C off_top = sn, off_bottom = sn, diag_bottom = cs;
      if (s.convention == BsConvention::Rx) {
        off_top = i * sn;
        off_bottom = i * sn;
      } else if (s.convention == BsConvention::H) {
        diag_bottom = -cs;
      } else {
        off_top = -sn;
      }
      m << e(s.phi_tl + s.phi_tr) * cs, e(s.phi_bl + s.phi_tr) * off_top,
           e(s.phi_br + s.phi_tl) * off_bottom, e(s.phi_bl + s.phi_br) * diag_bottom;
      return m;
    }
  }
  return m;
}

// Single-angle, four-phase beam splitter
//   [[sin t e^{i ac}, cos t e^{i bc}], [cos t e^{i ad}, sin t e^{i bd}]].
template <typename Scalar = double>
struct GeneralBeamSplitter {
  Scalar theta = 0;
  Scalar phi_ac = 0, phi_ad = 0, phi_bc = 0, phi_bd = 0;
};

template <typename Scalar>
Matrix2c<Scalar> general_bs_matrix(const GeneralBeamSplitter<Scalar>& g) {
  using C = std::complex<Scalar>;
  const C i(0, 1);
  Matrix2c<Scalar> m;
  m << std::sin(g.theta) * std::exp(i * g.phi_ac), std::cos(g.theta) * std::exp(i * g.phi_bc),
       std::cos(g.theta) * std::exp(i * g.phi_ad), std::sin(g.theta) * std::exp(i * g.phi_bd);
  return m;
}

// BS1 parameters expressed in the general form.
template <typename Scalar>
GeneralBeamSplitter<Scalar> general_from_bs1(Scalar theta, Scalar phi_r, Scalar phi_t,
                                             Scalar phi_0) {
  return {theta, phi_0 + phi_r, phi_0 + phi_t, phi_0 - phi_t, phi_0 - phi_r - Scalar(kPi)};
}

template <typename Scalar>
MatrixXc<Scalar> ps_matrix(const PhaseShifterSpec<Scalar>& s) {
  MatrixXc<Scalar> m(1, 1);
  m(0, 0) = std::exp(std::complex<Scalar>(0, s.phi));
  return m;
}

template <typename Scalar = double>
MatrixXc<Scalar> perm_matrix(const PermutationSpec& p) {
  const auto n = static_cast<Eigen::Index>(p.target.size());
  MatrixXc<Scalar> m = MatrixXc<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(p.target[i], i) = 1;
  return m;
}

template <typename Scalar>
Matrix2c<Scalar> wave_plate_matrix(const WavePlateSpec<Scalar>& w) {
  using C = std::complex<Scalar>;
  const C i(0, 1);
  Scalar c = std::cos(w.delta), s = std::sin(w.delta);
  Scalar z = std::cos(2 * w.xi), x = std::sin(2 * w.xi);
  Matrix2c<Scalar> m;
  m << c + i * s * z, i * s * x,
       i * s * x, c - i * s * z;
  return m;
}

template <typename Scalar>
Matrix2c<Scalar> rotator_matrix(const PolarizationRotatorSpec<Scalar>& r) {
  Matrix2c<Scalar> m;
  m << std::cos(r.theta), std::sin(r.theta),
       -std::sin(r.theta), std::cos(r.theta);
  return m;
}

// Channel order (H_a, V_a, H_b, V_b).
template <typename Scalar = double>
Matrix4c<Scalar> pbs_matrix() {
  Matrix4c<Scalar> m;
  m << 0, 0, 1, 0,
       0, 1, 0, 0,
       1, 0, 0, 0,
       0, 0, 0, 1;
  return m;
}

// Spatial modes covered by the component.
int span(const Component& c);

// True for elements that act on the polarization channels of a mode (wave
// plates, rotators, PBS) and therefore need a polarized register.
bool acts_on_polarization(const Component& c);

// Throws InvalidSpec for malformed permutations and NotUnitary for bad
// explicit matrices.
void validate(const Component& c);

// Local matrix: span x span for spatial elements, 2x2 Jones for wave plates
// and rotators, 4x4 for the PBS.
Matrix local_matrix(const Component& c);

std::string describe(const Component& c);

}  // namespace photonsim

#endif  // PHOTONSIM_COMPONENTS_HPP
